#!/usr/bin/env python3
"""Numbering rationals, and running programs on them through the numbering.

Walks the encoding layer end to end: the diagonal pairing, the two
packings of (sign, numerator, denominator) into one natural, translation
between them, and a recursive-function program evaluated on rationals by
conjugation through the numbering.
"""

from fractions import Fraction

from exactdyn import murec
from exactdyn.encoding import Encoding, decode_rational, encode_rational, pair, translate, unpair
from exactdyn.errors import NotACodeError
from exactdyn.rational import format_rational


def main() -> None:
    print("== diagonal pairing ==")
    for n, p in [(0, 0), (1, 0), (0, 1), (2, 2), (10, 3)]:
        c = pair(n, p)
        print(f"  pair({n}, {p}) = {c:4d}   unpair({c}) = {unpair(c)}")

    print("\n== numbering rationals ==")
    for q in [Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(22, 7)]:
        c = encode_rational(q, Encoding.CANONICAL)
        c_alt = encode_rational(q, Encoding.ALTERNATIVE)
        print(f"  {format_rational(q):>5} -> canonical {c:6d}, alternative {c_alt:6d}")
        assert decode_rational(c) == q

    print("\n== not every natural is a code ==")
    for c in range(8):
        try:
            q = decode_rational(c)
            print(f"  {c} decodes to {format_rational(q)}")
        except NotACodeError as exc:
            print(f"  {c} is not a code ({exc})")

    print("\n== translation between the two numberings ==")
    c = encode_rational(Fraction(1, 2))
    moved = translate(c, Encoding.CANONICAL, Encoding.ALTERNATIVE)
    print(f"  1/2: canonical code {c} -> alternative code {moved}")
    print(f"  decoded back: {format_rational(decode_rational(moved, Encoding.ALTERNATIVE))}")

    print("\n== a program on naturals becomes a map on rationals ==")
    identity = murec.Proj(1, 1)
    print("  the identity program fixes every rational:",
          murec.conjugate_evaluate(identity, (Fraction(-7, 9),), 10**4))
    print("  but the successor program leaves the code image:")
    try:
        murec.conjugate_evaluate(murec.Succ(), (Fraction(0),), 10**4)
    except NotACodeError as exc:
        print(f"    {exc}")


if __name__ == "__main__":
    main()
