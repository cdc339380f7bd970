"""Numbering of rationals by naturals via the diagonal pairing bijection.

``pair`` is the classic diagonal enumeration of N x N; a rational is coded
by packing (sign flag, reduced numerator, denominator) with two pair
applications.  Two distinct packings are provided so that code consumers
can be exercised against more than one numbering; ``translate`` converts
codes between them by decoding and re-encoding.

Sign convention: flag 0 for r >= 0, flag 1 for r < 0, so zero (stored as
0/1 with flag 0) has exactly one code.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt

from .errors import NotACodeError


class Encoding(enum.Enum):
    CANONICAL = "canonical"
    ALTERNATIVE = "alternative"


def pair(n: int, p: int) -> int:
    """Diagonal pairing (n + p)(n + p + 1)/2 + p, a bijection N^2 -> N."""
    if n < 0 or p < 0:
        raise ValueError("pair expects non-negative integers")
    s = n + p
    return s * (s + 1) // 2 + p


def unpair(c: int) -> tuple[int, int]:
    """Inverse of pair; exact at any magnitude (integer square root)."""
    if c < 0:
        raise ValueError("unpair expects a non-negative integer")
    s = (isqrt(8 * c + 1) - 1) // 2
    p = c - s * (s + 1) // 2
    return s - p, p


def encode_rational(r: Fraction, encoding: Encoding = Encoding.CANONICAL) -> int:
    sign = 1 if r < 0 else 0
    num = abs(r.numerator)
    den = r.denominator
    if encoding is Encoding.CANONICAL:
        return pair(pair(sign, num), den)
    return pair(num, pair(sign, den))


def decode_rational(c: int, encoding: Encoding = Encoding.CANONICAL) -> Fraction:
    """Partial inverse of encode_rational.

    Raises NotACodeError when c does not decode to a canonical triple:
    sign flag above 1, zero denominator, unreduced num/den, or a zero
    numerator paired with the negative flag or a denominator other than 1.
    """
    if c < 0:
        raise NotACodeError(f"{c} is negative")
    if encoding is Encoding.CANONICAL:
        inner, den = unpair(c)
        sign, num = unpair(inner)
    else:
        num, inner = unpair(c)
        sign, den = unpair(inner)
    if sign > 1:
        raise NotACodeError(f"{c}: sign flag {sign} is not 0 or 1")
    if den == 0:
        raise NotACodeError(f"{c}: zero denominator")
    if num == 0 and (sign == 1 or den != 1):
        raise NotACodeError(f"{c}: zero numerator must carry sign 0 and denominator 1")
    value = Fraction(num, den)
    if value.numerator != num or value.denominator != den:
        raise NotACodeError(f"{c}: {num}/{den} is not reduced")
    return -value if sign == 1 else value


def translate(c: int, source: Encoding, target: Encoding) -> int:
    """Re-express a valid code of `source` as a code of `target`."""
    return encode_rational(decode_rational(c, source), target)
