import random
from fractions import Fraction

import pytest

from exactdyn import baker
from exactdyn.checks import seeded_unit_rationals
from exactdyn.errors import DomainError
from exactdyn.realfn import check_modulus

SPECIAL = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(3, 4), Fraction(2, 3)]


@pytest.mark.parametrize(
    "x, image",
    [
        (Fraction(1, 2), Fraction(1)),
        (Fraction(3, 4), Fraction(1, 2)),
        (Fraction(2, 3), Fraction(2, 3)),
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
    ],
)
def test_step_examples(x, image):
    assert baker.step(x) == image


def test_step_rejects_outside_unit_interval():
    for bad in (Fraction(-1, 10), Fraction(11, 10)):
        with pytest.raises(DomainError):
            baker.step(bad)
        with pytest.raises(DomainError):
            baker.iterate(bad, 3)


def test_iterate_examples():
    x = Fraction(5, 7)
    assert baker.iterate(x, 0) == x
    assert baker.iterate(Fraction(1, 48), 4) == Fraction(1, 3)
    assert baker.iterate(Fraction(1, 16), 4) == 1


def test_orbit_matches_iterate():
    x = Fraction(1, 48)
    points = baker.orbit(x, 6)
    assert len(points) == 7
    for k, p in enumerate(points):
        assert p == baker.iterate(x, k)


def test_range_preservation():
    rng = random.Random(1)
    for x in SPECIAL + seeded_unit_rationals(rng, 500):
        assert 0 <= baker.step(x) <= 1


def test_step_is_2_lipschitz():
    rng = random.Random(2)
    points = SPECIAL + seeded_unit_rationals(rng, 200)
    for i, x in enumerate(points):
        for y in points[i + 1 :: 5]:
            assert abs(baker.step(x) - baker.step(y)) <= 2 * abs(x - y)


def test_iterate_is_2_to_n_lipschitz():
    rng = random.Random(3)
    points = SPECIAL + seeded_unit_rationals(rng, 80)
    for n in range(13):
        bound = 2**n
        for _ in range(100):
            x, y = rng.sample(points, 2)
            assert abs(baker.iterate(x, n) - baker.iterate(y, n)) <= bound * abs(x - y)


def test_real_fn_modulus_and_clamping():
    fn = baker.as_real_fn(3)
    assert fn.modulus(Fraction(1, 1000)) == Fraction(1, 8000)
    # q nudged outside [0,1] by the permitted slack is clamped, not rejected
    assert fn.approx(Fraction(1, 10), Fraction(-1, 100)) == baker.iterate(Fraction(0), 3)
    assert fn.approx(Fraction(1, 10), Fraction(101, 100)) == baker.iterate(Fraction(1), 3)
    ident = baker.as_real_fn(0)
    assert ident.approx(Fraction(1, 10), Fraction(1, 3)) == Fraction(1, 3)


def test_real_fn_certified_up_to_ten_steps():
    for n in (1, 4, 7, 10):
        report = check_modulus(baker.as_real_fn(n), lambda q, n=n: baker.iterate(q, n), 400, seed=0)
        assert report.ok, report.failures[0]


def test_witness_examples():
    w = baker.sensitivity_witness(Fraction(1, 10), Fraction(1, 3), Fraction(1))
    assert (w.start_a, w.start_b, w.steps) == (Fraction(1, 48), Fraction(1, 16), 4)
    w = baker.sensitivity_witness(Fraction(1, 100), Fraction(0), Fraction(1))
    assert (w.start_a, w.start_b, w.steps) == (Fraction(0), Fraction(1, 128), 7)
    assert w.start_gap == Fraction(1, 128) <= Fraction(1, 100)
    assert baker.iterate(w.start_b, 7) == 1
    # eta >= 1 needs no scaling at all
    w = baker.sensitivity_witness(Fraction(1), Fraction(0), Fraction(1))
    assert w.steps == 0 and w.start_gap <= w.eta


def test_witness_rejects_bad_inputs():
    with pytest.raises(DomainError):
        baker.sensitivity_witness(Fraction(0), Fraction(0), Fraction(1))
    with pytest.raises(DomainError):
        baker.sensitivity_witness(Fraction(1, 10), Fraction(3, 2), Fraction(1))


def test_hundred_seeded_witnesses_are_exact():
    rng = random.Random(20260808)
    for _ in range(100):
        eta = Fraction(1 + rng.randrange(10**6), 10**6)
        a, b = seeded_unit_rationals(rng, 2)
        w = baker.sensitivity_witness(eta, a, b)
        assert 0 <= w.start_a <= 1 and 0 <= w.start_b <= 1
        assert w.start_gap <= eta
        assert Fraction(1, 2**w.steps) <= eta
        assert baker.iterate(w.start_a, w.steps) == a
        assert baker.iterate(w.start_b, w.steps) == b
        assert w.end_gap == abs(a - b)


def test_arbitrary_separation_from_tiny_eta():
    # however small eta, targets 0 and 1 force the orbits a full unit apart
    for j in (1, 3, 6, 9):
        w = baker.sensitivity_witness(Fraction(1, 10**j), Fraction(0), Fraction(1))
        assert w.start_gap <= Fraction(1, 10**j)
        assert w.end_gap == 1
