"""Seeded property suites for every module, behind ``exactdyn check``.

Each suite re-verifies its module's contract at interactive scale:
round trips, oracle agreement, Lipschitz bounds, witness validity.  All
sampling is driven by one seed, so a run is reproducible bit for bit.
The pytest suite exercises the same properties at larger scales; this
module is the self-contained, installable subset.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import baker, dissipative, grid, murec, readout, realfn
from .encoding import Encoding, decode_rational, encode_rational, pair, translate, unpair
from .errors import NotACodeError
from .rational import format_rational


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, body: Callable[[], str | None]) -> CheckResult:
    try:
        detail = body()
    except Exception as exc:  # a crashing check is a failing check
        return CheckResult(name, False, f"raised {exc!r}")
    return CheckResult(name, detail is None, detail or "")


# --- seeded samplers (shared with the test suite) ---


def seeded_rationals(rng: random.Random, count: int, digit_cap: int = 9) -> list[Fraction]:
    """Canonical rationals of varied magnitude, reduced by construction."""
    out = []
    for _ in range(count):
        digits = rng.randrange(1, digit_cap)
        num = rng.randrange(0, 10**digits)
        den = rng.randrange(1, 10**digits)
        q = Fraction(num, den)
        out.append(-q if rng.randrange(2) else q)
    return out


def seeded_unit_rationals(rng: random.Random, count: int, den_cap: int = 10**4) -> list[Fraction]:
    out = []
    for _ in range(count):
        den = rng.randrange(1, den_cap)
        out.append(Fraction(rng.randrange(0, den + 1), den))
    return out


# --- encoding ---


def encoding_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)

    def pairing_window() -> str | None:
        for c in range(10**4):
            if pair(*unpair(c)) != c:
                return f"pair(unpair({c})) != {c}"
        for n in range(100):
            for p in range(100):
                if unpair(pair(n, p)) != (n, p):
                    return f"unpair(pair({n},{p})) wrong"
        return None

    def round_trip() -> str | None:
        samples = seeded_rationals(rng, 2000)
        samples += [Fraction(rng.randrange(10**60), rng.randrange(1, 10**60)) for _ in range(5)]
        for q in samples:
            for enc in Encoding:
                if decode_rational(encode_rational(q, enc), enc) != q:
                    return f"{format_rational(q)} broke the {enc.value} round trip"
        return None

    def injectivity() -> str | None:
        distinct = sorted(set(seeded_rationals(rng, 1200)))[:1000]
        codes = {encode_rational(q) for q in distinct}
        if len(codes) != len(distinct):
            return "two distinct rationals share a code"
        return None

    def translation() -> str | None:
        for c in range(10**4):
            for source, target in (
                (Encoding.CANONICAL, Encoding.ALTERNATIVE),
                (Encoding.ALTERNATIVE, Encoding.CANONICAL),
            ):
                try:
                    q = decode_rational(c, source)
                except NotACodeError:
                    continue
                if decode_rational(translate(c, source, target), target) != q:
                    return f"translation of {c} is incoherent"
                if translate(c, source, source) != c:
                    return f"identity translation moved {c}"
        return None

    return [
        _check("encoding: pairing bijectivity window", pairing_window),
        _check("encoding: rational round trip, both numberings", round_trip),
        _check("encoding: injectivity sample", injectivity),
        _check("encoding: translation coherence", translation),
    ]


# --- murec ---

_DIVERGENT = murec.Mu(murec.Comp(murec.Succ(), (murec.Proj(2, 2),)))


def murec_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)
    add = murec.builtin_program("addition")
    mul = murec.builtin_program("multiplication")
    pred = murec.builtin_program("predecessor")
    sub = murec.builtin_program("truncated_subtraction")
    sign = murec.builtin_program("sign")

    def corpus_arities() -> str | None:
        expected = {"addition": 2, "multiplication": 2, "predecessor": 1,
                    "truncated_subtraction": 2, "sign": 1}
        for name, want in expected.items():
            got = murec.arity(murec.builtin_program(name))
            if got != want:
                return f"{name} has arity {got}, expected {want}"
        return None

    def oracle_agreement() -> str | None:
        for x in range(21):
            for y in range(21):
                cases = (
                    (add, x + y, "addition"),
                    (mul, x * y, "multiplication"),
                    (sub, max(x - y, 0), "truncated_subtraction"),
                )
                for term, want, name in cases:
                    got = murec.evaluate(term, (x, y), fuel)
                    if got != murec.Value(want):
                        return f"{name}({x},{y}) = {got}, expected {want}"
        for y in range(60):
            if murec.evaluate(pred, (y,), fuel) != murec.Value(max(y - 1, 0)):
                return f"predecessor({y}) wrong"
            if murec.evaluate(sign, (y,), fuel) != murec.Value(min(y, 1)):
                return f"sign({y}) wrong"
        return None

    def minimization() -> str | None:
        lookup = murec.Mu(sub)  # least y with x - y = 0 is x itself
        for x in (0, 1, 7, 23):
            got = murec.evaluate(lookup, (x,), fuel)
            if got != murec.Value(x):
                return f"mu over truncated subtraction at {x} gave {got}"
            for z in range(x):
                probe = murec.evaluate(sub, (x, z), fuel)
                if probe == murec.Value(0):
                    return f"witness {x} is not minimal: body vanished at {z}"
        return None

    def divergence() -> str | None:
        for budget in (10**3, 10**4):
            got = murec.evaluate(_DIVERGENT, (0,), budget)
            if got != murec.Diverged(budget):
                return f"successor search terminated: {got}"
        return None

    def fuel_monotonicity() -> str | None:
        for _ in range(40):
            x, y = rng.randrange(12), rng.randrange(12)
            low = 1 + rng.randrange(200)
            first = murec.evaluate(mul, (x, y), low)
            if isinstance(first, murec.Value):
                for extra in (1, 17, 10**6 - low):
                    again = murec.evaluate(mul, (x, y), low + extra)
                    if again != first:
                        return f"mul({x},{y}) changed value with more fuel"
        return None

    def conjugation() -> str | None:
        if murec.conjugate_evaluate(murec.Proj(1, 1), (Fraction(1, 2),), fuel) != Fraction(1, 2):
            return "identity is not conjugation-invariant"
        for term, args in ((murec.Succ(), (Fraction(0),)), (murec.Zero(1), (Fraction(-1, 3),))):
            try:
                murec.conjugate_evaluate(term, args, fuel)
                return f"{term} unexpectedly produced a code"
            except NotACodeError:
                pass
        return None

    return [
        _check("murec: corpus programs parse with expected arities", corpus_arities),
        _check("murec: corpus agrees with built-in arithmetic", oracle_agreement),
        _check("murec: minimization returns least witnesses", minimization),
        _check("murec: unsatisfiable search diverges at any budget", divergence),
        _check("murec: values are stable under extra fuel", fuel_monotonicity),
        _check("murec: conjugated evaluation decodes correctly", conjugation),
    ]


# --- realfn (exercised with the folded doubling map) ---


def realfn_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)

    def certified_moduli() -> str | None:
        for n in (1, 2, 3, 6):
            report = realfn.check_modulus(
                baker.as_real_fn(n), lambda q, n=n: baker.iterate(q, n), 250, seed
            )
            if not report.ok:
                return f"n={n}: {report.failures[0]}"
        return None

    def wrong_modulus_detected() -> str | None:
        honest = baker.as_real_fn(2)
        lying = realfn.RealFn(approx=honest.approx, modulus=lambda eps: eps, domain=honest.domain)
        report = realfn.check_modulus(lying, lambda q: baker.iterate(q, 2), 250, seed)
        if report.ok:
            return "an accuracy rule off by 4x went unnoticed"
        return None

    def composition_modulus() -> str | None:
        outer = realfn.RealFn(lambda e, q: q, lambda e: e / 2, realfn.UNIT)
        inner = realfn.RealFn(lambda e, q: q, lambda e: e / 4, realfn.UNIT)
        composed = realfn.compose(outer, inner)
        for k in range(1, 12):
            eps = Fraction(1, k)
            if composed.modulus(eps) != eps / 8:
                return f"composed accuracy rule at {eps} is {composed.modulus(eps)}"
        return None

    def composition_agrees() -> str | None:
        twice = realfn.compose(baker.as_real_fn(1), baker.as_real_fn(1))
        direct = baker.as_real_fn(2)
        ident = realfn.identity_on(realfn.UNIT)
        wrapped = realfn.compose(ident, direct)
        for x in seeded_unit_rationals(rng, 40):
            point = realfn.from_rational(x)
            for eps in (Fraction(1, 10), Fraction(1, 1000)):
                if realfn.evaluate(twice, point, eps) != baker.iterate(x, 2):
                    return f"twice-composed map drifted at {format_rational(x)}"
                if realfn.evaluate(wrapped, point, eps) != realfn.evaluate(direct, point, eps):
                    return "identity is not neutral for composition"
        report = realfn.check_modulus(twice, lambda q: baker.iterate(q, 2), 200, seed)
        if not report.ok:
            return f"composed map broke its guarantee: {report.failures[0]}"
        return None

    def uniform_continuity() -> str | None:
        fn = baker.as_real_fn(3)
        for x in seeded_unit_rationals(rng, 120):
            eps = Fraction(1, 1 + rng.randrange(500))
            slack = fn.modulus(eps)
            x_alt = min(x + slack * Fraction(rng.randrange(101), 100), Fraction(1))
            if abs(baker.iterate(x, 3) - baker.iterate(x_alt, 3)) > 2 * eps:
                return f"nearby points {format_rational(x)}, {format_rational(x_alt)} separate"
        return None

    def evaluate_accuracy() -> str | None:
        for n in (1, 4):
            fn = baker.as_real_fn(n)
            for x in seeded_unit_rationals(rng, 60):
                eps = Fraction(1, 1 + rng.randrange(10**4))
                got = realfn.evaluate(fn, realfn.from_rational(x), eps)
                if abs(got - baker.iterate(x, n)) > eps:
                    return f"evaluate missed by more than eps at {format_rational(x)}"
        return None

    def constant_rule() -> str | None:
        fn = realfn.constant_on(Fraction(0), realfn.UNIT)
        report = realfn.check_modulus(fn, lambda q: Fraction(0), 120, seed)
        return None if report.ok else str(report.failures[0])

    return [
        _check("realfn: folded doubling accuracy rules certified", certified_moduli),
        _check("realfn: deliberately wrong accuracy rule is caught", wrong_modulus_detected),
        _check("realfn: composition composes accuracy rules", composition_modulus),
        _check("realfn: composed map equals the direct two-step map", composition_agrees),
        _check("realfn: sampled uniform continuity", uniform_continuity),
        _check("realfn: evaluate lands within the requested accuracy", evaluate_accuracy),
        _check("realfn: constants satisfy any accuracy rule", constant_rule),
    ]


# --- baker ---


def baker_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)
    special = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)]

    def range_preserved() -> str | None:
        for x in special + seeded_unit_rationals(rng, 300):
            y = baker.step(x)
            if y < 0 or y > 1:
                return f"step({format_rational(x)}) = {format_rational(y)} left [0,1]"
        return None

    def lipschitz() -> str | None:
        points = special + seeded_unit_rationals(rng, 120)
        for i, x in enumerate(points):
            for y in points[i + 1 :: 7]:
                if abs(baker.step(x) - baker.step(y)) > 2 * abs(x - y):
                    return f"step stretched {format_rational(x)}, {format_rational(y)} by > 2"
        for n in (3, 7, 12):
            bound = 2**n
            for _ in range(60):
                x, y = rng.sample(points, 2)
                if abs(baker.iterate(x, n) - baker.iterate(y, n)) > bound * abs(x - y):
                    return f"{n}-step iterate beat Lipschitz bound {bound}"
        return None

    def witnesses() -> str | None:
        for _ in range(100):
            eta = Fraction(1 + rng.randrange(10**6), 10**6)
            a, b = seeded_unit_rationals(rng, 2)
            w = baker.sensitivity_witness(eta, a, b)
            if w.start_gap > w.eta or Fraction(1, 2**w.steps) > w.eta:
                return f"witness for eta={format_rational(eta)} starts too far apart"
            if baker.iterate(w.start_a, w.steps) != a or baker.iterate(w.start_b, w.steps) != b:
                return f"witness for eta={format_rational(eta)} missed its targets"
        return None

    def maximal_spread() -> str | None:
        w = baker.sensitivity_witness(Fraction(1, 10**6), Fraction(0), Fraction(1))
        if w.end_gap != 1:
            return f"end separation {format_rational(w.end_gap)} != 1"
        if w.start_gap > Fraction(1, 10**6):
            return "starts are farther apart than eta"
        return None

    def worked_examples() -> str | None:
        cases = [
            (baker.step(Fraction(1, 2)), Fraction(1)),
            (baker.step(Fraction(3, 4)), Fraction(1, 2)),
            (baker.step(Fraction(2, 3)), Fraction(2, 3)),
            (baker.iterate(Fraction(1, 48), 4), Fraction(1, 3)),
            (baker.iterate(Fraction(1, 16), 4), Fraction(1)),
        ]
        for got, want in cases:
            if got != want:
                return f"got {format_rational(got)}, wanted {format_rational(want)}"
        return None

    return [
        _check("baker: [0,1] maps into [0,1]", range_preserved),
        _check("baker: 2-Lipschitz step, 2^n-Lipschitz iterate", lipschitz),
        _check("baker: 100 sensitivity witnesses are exact", witnesses),
        _check("baker: tiny eta still yields full separation", maximal_spread),
        _check("baker: worked step and iterate values", worked_examples),
    ]


# --- grid ---


def grid_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)
    resolutions = list(range(1, 21)) + [rng.randrange(21, 1001) for _ in range(25)]

    def exactness() -> str | None:
        for n_res in resolutions:
            for i in range(n_res + 1):
                s = grid.GridState(n_res, i)
                if grid.step(s).position != baker.step(s.position):
                    return f"grid step at {i}/{n_res} disagrees with the exact map"
        return None

    def collapse() -> str | None:
        for n_res in range(1, 61):
            eta = grid.min_separation(n_res)
            for i in range(n_res + 1):
                for j in range(n_res + 1):
                    close = abs(Fraction(i, n_res) - Fraction(j, n_res)) <= eta
                    if close != (i == j):
                        return f"N={n_res}: closeness below 1/(2N) is not equality"
        return None

    def table_matches_iteration() -> str | None:
        for n_res in (1, 2, 7, 31, 40):
            lookup = dict(grid.table(n_res))
            if len(lookup) != n_res + 1:
                return f"table for N={n_res} has {len(lookup)} rows"
            for i in range(n_res + 1):
                via_table = i
                for n in range(1, 21):
                    via_table = lookup[via_table]
                    if via_table != grid.iterate(grid.GridState(n_res, i), n).index:
                        return f"table iteration diverged at N={n_res}, start {i}"
        return None

    def eventual_periodicity() -> str | None:
        for n_res in range(1, 61):
            for i in range(n_res + 1):
                orbit, entry, length = grid.orbit_with_cycle(grid.GridState(n_res, i))
                if entry + length > n_res + 2:
                    return f"orbit of {i}/{n_res} took too long to cycle"
                if grid.iterate(grid.GridState(n_res, i), entry + length).index != orbit[entry]:
                    return f"cycle detection inconsistent at {i}/{n_res}"
        return None

    return [
        _check("grid: doubling and reflecting preserve every grid", exactness),
        _check("grid: sensitivity collapses below half the spacing", collapse),
        _check("grid: transition-table lookups equal iteration", table_matches_iteration),
        _check("grid: every orbit cycles within N+2 steps", eventual_periodicity),
    ]


# --- readout ---


def readout_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)

    def device_instance() -> str | None:
        got = readout.successors(readout.Readout(3, 0))
        if got.members != (0, 1):
            return f"first cell of the 3-digit device reaches {got.texts()}"
        return None

    def worked_examples() -> str | None:
        cases = [
            (readout.successors(readout.Readout(3, 999)).members, (0, 1, 2)),
            (readout.successors(readout.Readout(3, 500)).members, (998, 999, 1000)),
            (readout.successors(readout.Readout(1, 0)).members, (0, 1)),
            (readout.successors(readout.Readout(1, 10)).members, (0,)),
            (readout.reach(readout.Readout(3, 0), 2).members, (0, 1, 2, 3)),
            (readout.reach(readout.Readout(3, 1000), 1).members, (0,)),
            (readout.measure(Fraction(49, 100000), 3).index, 0),
            (readout.measure(Fraction(1), 3).index, 1000),
            (readout.measure(Fraction(1, 2), 3).index, 500),
        ]
        for got, want in cases:
            if got != want:
                return f"got {got}, wanted {want}"
        return None

    def soundness() -> str | None:
        for digits in (1, 2):
            for k in range(10**digits + 1):
                cell = readout.Readout(digits, k).cell()
                claimed = readout.successors(readout.Readout(digits, k))
                width = cell.hi - cell.lo
                for _ in range(60):
                    if width == 0:
                        x = cell.lo
                    else:
                        x = cell.lo + width * Fraction(rng.randrange(10**6), 10**6 + 1)
                    if readout.measure(baker.step(x), digits).index not in claimed:
                        return f"d={digits}: sampled image of cell {k} escaped its successors"
        return None

    def witness_completeness() -> str | None:
        for digits in (1, 2):
            for k in range(10**digits + 1):
                m = readout.Readout(digits, k)
                claimed = readout.successors(m)
                witnesses = readout.successor_witnesses(m)
                if set(witnesses) != set(claimed.members):
                    return f"d={digits}: cell {k} lacks witnesses for some successors"
                cell = m.cell()
                for target, x in witnesses.items():
                    inside = (cell.lo < x or (cell.lo == x and not cell.lo_open)) and (
                        x < cell.hi or (x == cell.hi and not cell.hi_open)
                    )
                    if not inside:
                        return f"d={digits}: witness for {k}->{target} left the cell"
                    if readout.measure(baker.step(x), digits).index != target:
                        return f"d={digits}: witness for {k}->{target} does not certify"
        return None

    def reach_recurrence() -> str | None:
        for digits, starts in ((1, range(11)), (2, [0, 13, 50, 77, 100])):
            for k in starts:
                m = readout.Readout(digits, k)
                for n in range(6):
                    direct = set(readout.reach(m, n + 1).members)
                    rebuilt: set[int] = set()
                    for j in readout.reach(m, n).members:
                        rebuilt.update(readout.successors(readout.Readout(digits, j)).members)
                    if direct != rebuilt:
                        return f"d={digits}: reach recurrence failed at start {k}, n={n}"
        return None

    def collapse() -> str | None:
        for digits in (1, 2):
            eta = readout.separation_eta(digits)
            values = [readout.Readout(digits, k).value for k in range(10**digits + 1)]
            for i, u in enumerate(values):
                for j, v in enumerate(values):
                    if (abs(u - v) <= eta) != (i == j):
                        return f"d={digits}: readouts within eta are not equal"
        return None

    def table_shape() -> str | None:
        for digits in (1, 2):
            rows = readout.relation_table(digits)
            if len(rows) != 10**digits + 1:
                return f"d={digits}: table has {len(rows)} rows"
            if [k for k, _ in rows] != sorted(k for k, _ in rows):
                return f"d={digits}: table is not sorted"
        return None

    return [
        _check("readout: first 3-digit cell is followed by exactly two readouts", device_instance),
        _check("readout: worked successor, reach, and measure values", worked_examples),
        _check("readout: sampled images land in claimed successors", soundness),
        _check("readout: every claimed successor has a certifying witness", witness_completeness),
        _check("readout: n-step reach satisfies its recurrence", reach_recurrence),
        _check("readout: readouts within eta collapse to equality", collapse),
        _check("readout: relation table is complete and ordered", table_shape),
    ]


# --- dissipative ---


def dissipative_checks(seed: int, fuel: int) -> list[CheckResult]:
    rng = random.Random(seed)

    def convergence_bound() -> str | None:
        for delta in (Fraction(1, 10), Fraction(1, 100)):
            ceiling = 1 - delta
            for _ in range(40):
                x = ceiling * Fraction(rng.randrange(10**4 + 1), 10**4)
                for n in (1, 4, 8):
                    eps = Fraction(1, 10**6)
                    if dissipative.iterate_approx(x, n, eps) > ceiling ** (2**n) + eps:
                        return f"approximation exceeded the decay bound at {format_rational(x)}"
        return None

    def witness_family() -> str | None:
        for j in range(1, 7):
            eta = Fraction(1, 10**j)
            w = dissipative.discontinuity_witness(eta)
            if w.gap != 1:
                return f"eta=10^-{j}: gap {format_rational(w.gap)} != 1"
            if abs(w.x - w.x_alt) > eta:
                return f"eta=10^-{j}: witness pair too far apart"
        return None

    def threshold_date() -> str | None:
        value = Fraction(9, 10)
        for n in range(8):
            below = value < Fraction(1, 1000)
            if below != (n >= 7):
                return f"(9/10)^(2^{n}) is on the wrong side of 1/1000"
            value = value * value
        return None

    def finite_date_rules() -> str | None:
        for n in (1, 2, 4):
            report = realfn.check_modulus(
                dissipative.as_real_fn(n), lambda q, n=n: q ** (2**n), 150, seed
            )
            if not report.ok:
                return f"date {n}: {report.failures[0]}"
        return None

    def exact_small_cases() -> str | None:
        cases = [
            (dissipative.iterate_approx(Fraction(9, 10), 1, Fraction(1, 10**9)), Fraction(81, 100)),
            (dissipative.iterate_approx(Fraction(0), 9, Fraction(1, 10)), Fraction(0)),
            (dissipative.iterate_approx(Fraction(1), 9, Fraction(1, 10)), Fraction(1)),
        ]
        for got, want in cases:
            if got != want:
                return f"got {format_rational(got)}, wanted {format_rational(want)}"
        if dissipative.limit_state(Fraction(9, 10)) != 0 or dissipative.limit_state(Fraction(1)) != 1:
            return "limit map has the wrong values"
        return None

    return [
        _check("dissipative: iterates respect the decay bound", convergence_bound),
        _check("dissipative: discontinuity witnesses all achieve gap 1", witness_family),
        _check("dissipative: decay first beats 1/1000 at date 7", threshold_date),
        _check("dissipative: finite-date accuracy rules certified", finite_date_rules),
        _check("dissipative: exact values while sizes stay small", exact_small_cases),
    ]


_SUITES = (
    encoding_checks,
    murec_checks,
    realfn_checks,
    baker_checks,
    grid_checks,
    readout_checks,
    dissipative_checks,
)


def run_all(seed: int = 0, fuel: int = 10**6) -> list[CheckResult]:
    results: list[CheckResult] = []
    for suite in _SUITES:
        results.extend(suite(seed, fuel))
    return results
