#!/usr/bin/env python3
"""A system can be chaotic and still perfectly computable.

The folded doubling map stretches distances by 2 every step, so nearby
starts separate fast; yet its n-step iterate carries an explicit
accuracy rule eps/2^n, certified here against the exact dynamics.  What
breaks prediction is not the algorithm but the argument: the accuracy a
measurement would have to deliver shrinks like 1/2^n.
"""

from fractions import Fraction

from exactdyn import baker
from exactdyn.rational import format_rational, truncate_decimal
from exactdyn.realfn import check_modulus, evaluate, from_rational


def main() -> None:
    print("== two nearby starts, exact orbits ==")
    w = baker.sensitivity_witness(Fraction(1, 1000), Fraction(1, 3), Fraction(1))
    print(f"  witness: starts {format_rational(w.start_a)} and {format_rational(w.start_b)},"
          f" gap {format_rational(w.start_gap)} <= 1/1000")
    for k, (p, q) in enumerate(zip(baker.orbit(w.start_a, w.steps), baker.orbit(w.start_b, w.steps))):
        print(f"  step {k:2d}:  {truncate_decimal(p, 6)}  vs  {truncate_decimal(q, 6)}"
              f"   gap {truncate_decimal(abs(p - q), 6)}")
    print(f"  after {w.steps} steps the gap is {format_rational(w.end_gap)}: prescribed in advance")

    print("\n== the n-step map still has an algorithm ==")
    fn = baker.as_real_fn(10)
    eps = Fraction(1, 1000)
    print(f"  to get the date-10 state within {format_rational(eps)},"
          f" the start must be known within {format_rational(fn.modulus(eps))}")
    x = from_rational(Fraction(1, 3))
    print(f"  evaluate at 1/3: {format_rational(evaluate(fn, x, eps))}"
          f" (exact value {format_rational(baker.iterate(Fraction(1, 3), 10))})")

    print("\n== certify the accuracy rule against the exact dynamics ==")
    report = check_modulus(fn, lambda q: baker.iterate(q, 10), trials=500, seed=0)
    print(f"  {report.trials} sampled (eps, x, q) triples, {len(report.failures)} violations")

    print("\n== and catch a rule that promises too much ==")
    from exactdyn.realfn import RealFn

    lying = RealFn(approx=fn.approx, modulus=lambda e: e, domain=fn.domain)
    report = check_modulus(lying, lambda q: baker.iterate(q, 10), trials=500, seed=0)
    print(f"  claiming eps suffices as input accuracy: {len(report.failures)} violations, e.g.")
    print(f"    {report.failures[0]}")


if __name__ == "__main__":
    main()
