"""The folded doubling map as seen through a d-digit measuring device.

A readout truncates a position to d decimal digits, so it names the cell
[k/10^d, (k+1)/10^d) -- the set of positions the device cannot tell
apart -- with the top readout 1.000... naming exactly {1}.  Measurement
makes the dynamics nondeterministic: a cell's image under one time step
usually meets several cells, so one readout can be followed by several.

Successor sets are computed exactly.  The image of a cell under the
piecewise-affine step is one interval per branch, tracked with open and
closed endpoints; a readout is a successor precisely when its cell meets
that image, and single shared points count (the fold point 1/2 maps to 1
exactly).  Sampling alone would miss such measure-zero witnesses, which
is why the endpoints are bookkept instead of sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import InvalidStateError
from .rational import HALF, ONE, ZERO, require_unit_interval


@dataclass(frozen=True)
class Span:
    """An interval with individually open or closed endpoints."""

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and (self.lo_open or self.hi_open)

    def intersect(self, other: "Span") -> Optional["Span"]:
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif other.lo > self.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif other.hi < self.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        candidate = Span(lo, hi, lo_open, hi_open)
        return None if candidate.is_empty() else candidate

    def some_point(self) -> Fraction:
        """A member, preferring closed endpoints over the midpoint."""
        if not self.lo_open:
            return self.lo
        if not self.hi_open:
            return self.hi
        return (self.lo + self.hi) / 2


_RISING = Span(ZERO, HALF)
_FALLING = Span(HALF, ONE, lo_open=True)


@dataclass(frozen=True)
class Readout:
    """A d-digit truncated measurement: value index k out of 10^d."""

    digits: int
    index: int

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise InvalidStateError(f"digits {self.digits} must be >= 1")
        if not 0 <= self.index <= 10**self.digits:
            raise InvalidStateError(
                f"index {self.index} outside 0..10^{self.digits}"
            )

    @property
    def value(self) -> Fraction:
        return Fraction(self.index, 10**self.digits)

    @property
    def text(self) -> str:
        scale = 10**self.digits
        return f"{self.index // scale}.{self.index % scale:0{self.digits}d}"

    def cell(self) -> Span:
        """The set of positions this readout stands for."""
        scale = 10**self.digits
        if self.index == scale:
            return Span(ONE, ONE)
        return Span(
            Fraction(self.index, scale),
            Fraction(self.index + 1, scale),
            hi_open=True,
        )


def parse_readout(text: str, digits: int) -> Readout:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidStateError(f"not a readout: {text!r}") from exc
    scaled = value * 10**digits
    if scaled.denominator != 1:
        raise InvalidStateError(f"{text!r} is not a {digits}-digit readout")
    return Readout(digits, int(scaled))


def measure(x: Fraction, digits: int) -> Readout:
    """Truncate a position to d digits: index floor(x * 10^d)."""
    require_unit_interval(x, "position")
    if digits < 1:
        raise InvalidStateError(f"digits {digits} must be >= 1")
    scaled = x * 10**digits
    return Readout(digits, scaled.numerator // scaled.denominator)


@dataclass(frozen=True)
class SuccessorSet:
    digits: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise InvalidStateError("successor set must be nonempty")
        top = 10**self.digits
        if list(self.members) != sorted(set(self.members)) or not all(
            0 <= k <= top for k in self.members
        ):
            raise InvalidStateError("members must be distinct ascending readout indices")

    def readouts(self) -> Iterator[Readout]:
        for k in self.members:
            yield Readout(self.digits, k)

    def texts(self) -> list[str]:
        return [r.text for r in self.readouts()]

    def __contains__(self, index: int) -> bool:
        return index in self.members


def _branch_images(span: Span) -> list[tuple[Span, bool]]:
    """Exact image of a span under one step, one piece per branch.

    Returns (image span, rising?) pairs.  The rising branch x -> 2x keeps
    endpoint openness; the falling branch x -> 2 - 2x reverses the span,
    so the openness flags swap sides.
    """
    pieces: list[tuple[Span, bool]] = []
    rising = span.intersect(_RISING)
    if rising is not None:
        pieces.append(
            (Span(2 * rising.lo, 2 * rising.hi, rising.lo_open, rising.hi_open), True)
        )
    falling = span.intersect(_FALLING)
    if falling is not None:
        pieces.append(
            (
                Span(2 - 2 * falling.hi, 2 - 2 * falling.lo, falling.hi_open, falling.lo_open),
                False,
            )
        )
    return pieces


def _candidate_indices(image: Span, digits: int) -> range:
    scale = 10**digits
    lo_scaled = image.lo * scale
    hi_scaled = image.hi * scale
    first = lo_scaled.numerator // lo_scaled.denominator
    last = min(hi_scaled.numerator // hi_scaled.denominator, scale)
    return range(first, last + 1)


def successors(m: Readout) -> SuccessorSet:
    """Exactly the readouts of step images of points in m's cell."""
    found: set[int] = set()
    for image, _ in _branch_images(m.cell()):
        for k in _candidate_indices(image, m.digits):
            if k in found:
                continue
            if image.intersect(Readout(m.digits, k).cell()) is not None:
                found.add(k)
    return SuccessorSet(m.digits, tuple(sorted(found)))


def successor_witnesses(m: Readout) -> dict[int, Fraction]:
    """For each successor, a point of m's cell that steps into its cell.

    The witness is the branch preimage of a point of the (nonempty)
    intersection between the cell's image and the successor's cell, so
    it certifies membership constructively.
    """
    witnesses: dict[int, Fraction] = {}
    for image, rising in _branch_images(m.cell()):
        for k in _candidate_indices(image, m.digits):
            if k in witnesses:
                continue
            overlap = image.intersect(Readout(m.digits, k).cell())
            if overlap is None:
                continue
            y = overlap.some_point()
            x = y / 2 if rising else 1 - y / 2
            witnesses[k] = x
    return witnesses


def relation_table(digits: int) -> list[tuple[int, SuccessorSet]]:
    """Successor sets for every readout index, ascending."""
    return [
        (k, successors(Readout(digits, k))) for k in range(10**digits + 1)
    ]


def reach(m: Readout, n: int) -> SuccessorSet:
    """Readouts that may be observed exactly n steps after m.

    Iterates the set-valued image; the sequence of reachable sets over a
    finite state space must eventually cycle, so once a set repeats the
    answer for any larger n is read off the cycle instead of looped to.
    """
    if n < 0:
        raise InvalidStateError("step count must be non-negative")
    cache: dict[int, tuple[int, ...]] = {}

    def image(members: frozenset) -> frozenset:
        nxt: set[int] = set()
        for k in members:
            if k not in cache:
                cache[k] = successors(Readout(m.digits, k)).members
            nxt.update(cache[k])
        return frozenset(nxt)

    seen: dict[frozenset, int] = {}
    trail: list[frozenset] = []
    current = frozenset({m.index})
    k = 0
    while k < n:
        if current in seen:
            entry = seen[current]
            period = k - entry
            current = trail[entry + (n - entry) % period]
            break
        seen[current] = k
        trail.append(current)
        current = image(current)
        k += 1
    return SuccessorSet(m.digits, tuple(sorted(current)))


def separation_eta(digits: int) -> Fraction:
    """Half the minimal distance between distinct readout values."""
    if digits < 1:
        raise InvalidStateError(f"digits {digits} must be >= 1")
    return Fraction(1, 2 * 10**digits)
