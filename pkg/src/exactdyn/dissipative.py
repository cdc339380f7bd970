"""A dissipative system on [0,1] whose limit map is discontinuous: squaring.

One step sends x to x^2, so the state at date n is x^(2^n): every orbit
converges, to 0 for x < 1 and to 1 at the fixed point x = 1.  Finite-date
states are approximable to any accuracy (the exact value just gets big),
but the limit map jumps at 1, and ``discontinuity_witness`` produces, for
any closeness demand, a pair of starts that close together whose limits
differ by 1.  No input-accuracy rule can serve a function with such
witnesses, since any rule would force uniform continuity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rational import HALF, ONE, ZERO, clamp_unit, format_rational, require_unit_interval
from .realfn import UNIT, RealFn

# beyond this, iterates are tracked by rounded two-sided bounds instead of
# exactly: the exact value of x^(2^n) has doubly exponential size
EXACT_BITS_CAP = 4096


def step(x: Fraction) -> Fraction:
    require_unit_interval(x, "state")
    return x * x


def limit_state(x: Fraction) -> Fraction:
    """The limit of the orbit of x: 0 below 1, 1 at 1 (exactly decidable)."""
    require_unit_interval(x, "state")
    return ONE if x == 1 else ZERO


def iterate_approx(x: Fraction, n: int, eps: Fraction) -> Fraction:
    """A rational within eps of x^(2^n), never above it, never below 0.

    Squares exactly while the representation stays below EXACT_BITS_CAP
    bits, then switches to a bracketing pair rounded outward on a dyadic
    grid fine enough that the final width is below eps; squaring is
    monotone on [0,1], so the bracket is preserved.  The lower end is
    returned, so answers are one-sided underestimates.
    """
    require_unit_interval(x, "state")
    if n < 0:
        raise DomainError("date must be non-negative")
    if eps <= 0:
        raise DomainError("accuracy must be positive")
    # rounding at 2^-prec, amplified by at most 2 per remaining step, must
    # stay below eps overall
    amplified = (eps.denominator << (n + 4)) // eps.numerator
    prec = max(EXACT_BITS_CAP, amplified.bit_length())
    unit = 1 << prec
    lo = hi = x
    for _ in range(n):
        lo = lo * lo
        hi = hi * hi
        if lo.denominator.bit_length() > prec:
            lo = Fraction((lo.numerator << prec) // lo.denominator, unit)
        if hi.denominator.bit_length() > prec:
            hi = Fraction(-((-hi.numerator << prec) // hi.denominator), unit)
            if hi > 1:
                hi = ONE
    return lo if lo > 0 else ZERO


def first_date_below(x: Fraction, threshold: Fraction, max_date: int) -> int | None:
    """Least date n <= max_date with x^(2^n) < threshold, or None.

    Decided by exact squaring and exact comparison; the representation
    doubles in size per date, so keep max_date modest (a few dozen).
    """
    require_unit_interval(x, "state")
    if threshold <= 0:
        raise DomainError("threshold must be positive")
    if max_date < 0:
        raise DomainError("date bound must be non-negative")
    value = x
    for n in range(max_date + 1):
        if value < threshold:
            return n
        value = value * value
    return None


def as_real_fn(n: int) -> RealFn:
    """The date-n state map as an approximation-rule function on [0,1].

    The derivative of one squaring step is bounded by 2 on [0,1], so the
    n-step map is 2^n-Lipschitz; half the accuracy budget covers the
    argument error through that bound and half covers the bracketing of
    iterate_approx.
    """
    if n < 0:
        raise DomainError("date must be non-negative")
    scale = 2 ** (n + 1)
    return RealFn(
        approx=lambda eps, q: iterate_approx(clamp_unit(q), n, eps / 2),
        modulus=lambda eps: eps / scale,
        domain=UNIT,
    )


@dataclass(frozen=True)
class LimitWitness:
    """Starts within eta whose limit states differ by gap."""

    x: Fraction
    x_alt: Fraction
    eta: Fraction
    gap: Fraction

    def __str__(self) -> str:
        return (
            f"|{format_rational(self.x)} - {format_rational(self.x_alt)}| <= "
            f"{format_rational(self.eta)} but the limits differ by {format_rational(self.gap)}"
        )


def discontinuity_witness(eta: Fraction) -> LimitWitness:
    """A pair straddling the jump of the limit map at 1.

    x = 1 - min(eta, 1/2) has limit 0 while 1 has limit 1, so the gap is
    always exactly 1 no matter how small eta is: the family of witnesses
    defeats every candidate input-accuracy rule for the limit map.
    """
    if eta <= 0:
        raise DomainError("eta must be positive")
    x = 1 - min(eta, HALF)
    gap = abs(limit_state(x) - limit_state(ONE))
    return LimitWitness(x=x, x_alt=ONE, eta=eta, gap=gap)
