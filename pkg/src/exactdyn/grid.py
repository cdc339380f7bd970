"""The folded doubling map restricted to a finite uniform grid.

States are the N+1 points i/N of [0,1].  Both branches of the map are
integer-affine and preserve the grid, so the finite dynamics agrees with
the exact rational dynamics with no rounding rule at all.  On a finite
state space, closeness below half the minimal spacing already forces
equality, and every orbit is eventually periodic by pigeonhole.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidStateError


@dataclass(frozen=True)
class GridState:
    resolution: int
    index: int

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise InvalidStateError(f"resolution {self.resolution} must be >= 1")
        if not 0 <= self.index <= self.resolution:
            raise InvalidStateError(
                f"index {self.index} outside 0..{self.resolution}"
            )

    @property
    def position(self) -> Fraction:
        return Fraction(self.index, self.resolution)


def step(s: GridState) -> GridState:
    doubled = 2 * s.index
    j = doubled if doubled <= s.resolution else 2 * s.resolution - doubled
    return GridState(s.resolution, j)


def iterate(s: GridState, n: int) -> GridState:
    if n < 0:
        raise InvalidStateError("step count must be non-negative")
    for _ in range(n):
        s = step(s)
    return s


def table(resolution: int) -> list[tuple[int, int]]:
    """The complete graph of step as N+1 (index, successor index) pairs."""
    return [
        (i, step(GridState(resolution, i)).index) for i in range(resolution + 1)
    ]


def min_separation(resolution: int) -> Fraction:
    """Half the minimal distance between distinct grid positions: 1/(2N).

    Two grid points within this distance of each other are equal, which is
    exactly why the finite-grid system is not sensitive to initial
    conditions.
    """
    if resolution < 1:
        raise InvalidStateError(f"resolution {resolution} must be >= 1")
    return Fraction(1, 2 * resolution)


def orbit_with_cycle(s: GridState) -> tuple[list[int], int, int]:
    """Indices visited until the first repeat, with cycle entry and length.

    Returns (orbit, entry, length) where orbit lists the distinct states
    in visit order, orbit[entry:] is the cycle, and length = len(orbit) -
    entry.  Pigeonhole bounds the search by N + 2 steps.
    """
    first_seen: dict[int, int] = {}
    orbit: list[int] = []
    current = s
    while current.index not in first_seen:
        first_seen[current.index] = len(orbit)
        orbit.append(current.index)
        current = step(current)
    entry = first_seen[current.index]
    return orbit, entry, len(orbit) - entry
