import random
from fractions import Fraction

import pytest

from exactdyn.checks import seeded_rationals
from exactdyn.encoding import (
    Encoding,
    decode_rational,
    encode_rational,
    pair,
    translate,
    unpair,
)
from exactdyn.errors import NotACodeError


@pytest.mark.parametrize(
    "n, p, code",
    [(0, 0, 0), (1, 0, 1), (0, 1, 2), (1, 1, 4), (2, 2, 12)],
)
def test_pair_examples(n, p, code):
    assert pair(n, p) == code
    assert unpair(code) == (n, p)


def test_pairing_bijectivity_window():
    for c in range(10**4):
        assert pair(*unpair(c)) == c
    for n in range(100):
        for p in range(100):
            assert unpair(pair(n, p)) == (n, p)


def test_pair_rejects_negatives():
    with pytest.raises(ValueError):
        pair(-1, 0)
    with pytest.raises(ValueError):
        unpair(-3)


@pytest.mark.parametrize(
    "value, code",
    [(Fraction(0), 2), (Fraction(1, 2), 12), (Fraction(-1, 3), 31)],
)
def test_encode_examples(value, code):
    assert encode_rational(value, Encoding.CANONICAL) == code
    assert decode_rational(code, Encoding.CANONICAL) == value


def test_decode_rejects_non_codes():
    # unpair(3) = (2, 0): denominator 0
    with pytest.raises(NotACodeError):
        decode_rational(3)
    # sign flag above 1: encode by hand with sign=2
    with pytest.raises(NotACodeError):
        decode_rational(pair(pair(2, 1), 1))
    # unreduced 2/4
    with pytest.raises(NotACodeError):
        decode_rational(pair(pair(0, 2), 4))
    # negative zero
    with pytest.raises(NotACodeError):
        decode_rational(pair(pair(1, 0), 1))
    # zero with denominator 2
    with pytest.raises(NotACodeError):
        decode_rational(pair(pair(0, 0), 2))


def test_round_trip_both_encodings():
    rng = random.Random(20260808)
    for q in seeded_rationals(rng, 10**4):
        for enc in Encoding:
            assert decode_rational(encode_rational(q, enc), enc) == q


def test_round_trip_at_huge_magnitudes():
    # thousands of digits; the pairing must stay exact
    rng = random.Random(7)
    for _ in range(5):
        q = Fraction(rng.randrange(10**1000), rng.randrange(1, 10**1000))
        if rng.randrange(2):
            q = -q
        for enc in Encoding:
            assert decode_rational(encode_rational(q, enc), enc) == q


def test_injectivity_sample():
    rng = random.Random(11)
    distinct = sorted(set(seeded_rationals(rng, 1500)))[:1000]
    assert len(distinct) == 1000
    for enc in Encoding:
        codes = {encode_rational(q, enc) for q in distinct}
        assert len(codes) == 1000


def test_translate_examples():
    assert translate(12, Encoding.CANONICAL, Encoding.CANONICAL) == 12
    assert translate(12, Encoding.CANONICAL, Encoding.ALTERNATIVE) == 26
    with pytest.raises(NotACodeError):
        translate(3, Encoding.CANONICAL, Encoding.ALTERNATIVE)


def test_translation_coherence_below_10k():
    pairs = [
        (Encoding.CANONICAL, Encoding.ALTERNATIVE),
        (Encoding.ALTERNATIVE, Encoding.CANONICAL),
    ]
    seen_valid = 0
    for c in range(10**4):
        for source, target in pairs:
            try:
                q = decode_rational(c, source)
            except NotACodeError:
                continue
            seen_valid += 1
            assert translate(c, source, source) == c
            assert decode_rational(translate(c, source, target), target) == q
    assert seen_valid > 0
