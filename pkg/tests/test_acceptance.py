"""Acceptance gate: eight end-to-end criteria, each with a stated tolerance
and a runtime budget.  Every test prints one PASS/FAIL line on the terminal
(outside pytest's capture) so a run leaves a visible per-criterion record.
"""

import random
import time
from fractions import Fraction

from betaforge import (
    Cardinality,
    PeriodicWord,
    bfs_expansions,
    count_expansions,
    enumerate_expansions,
    eval_word,
    parse_word,
    q2_field,
    qf_field,
    reflect_point,
    reflect_word,
    sign,
    to_decimal,
    viable_prefix_counts,
)
from betaforge import fixtures
from betaforge.verify import (
    check_no_triple,
    check_orbit_identities,
    check_table,
    check_tail_bounds,
)

_CAPS = {"max_steps": 250, "max_nodes": 64}


def _criterion(capsys, number, label, budget, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\ncriterion {number} ({label}): FAIL after {elapsed:.2f}s")
        raise
    elapsed = time.perf_counter() - start
    verdict = "PASS" if elapsed < budget else "FAIL"
    with capsys.disabled():
        print(f"\ncriterion {number} ({label}): {verdict} "
              f"in {elapsed:.2f}s (budget {budget:.0f}s)")
    assert elapsed < budget, (
        f"criterion {number} exceeded its {budget}s budget: {elapsed:.2f}s")


def _within_ulp(x, decimal_text, ulp=Fraction(1, 10**6)):
    d = x - Fraction(decimal_text)
    return (d - ulp).sign() <= 0 and (d + ulp).sign() >= 0


def _member(k):
    return PeriodicWord((1,) + (0, 0, 0, 0) * (k - 1) + (0,), (1, 0))


def test_criterion_1_constants(capsys):
    def body():
        q = q2_field().q
        assert to_decimal(q, 15) == "1.710644095045033"
        p = qf_field().q
        assert to_decimal(p, 5) == "1.75488"
        assert p**4 == p**3 + p**2 + 1
        assert sign(q**6 - q**5 - 2 * q**4 + q**2 + q + 1) == -1

    _criterion(capsys, 1, "constants", 1.0, body)


def test_criterion_2_two_expansion_points(capsys):
    def body():
        F = q2_field()
        e1 = eval_word(parse_word("01(10)*"), F)
        assert e1 == eval_word(parse_word("10000(10)*"), F)
        e3 = eval_word(parse_word("0111(10)*"), F)
        assert e3 == eval_word(parse_word("100(10)*"), F)
        assert count_expansions(e1) == Cardinality.finite(2)
        assert count_expansions(e3) == Cardinality.finite(2)
        assert _within_ulp(e1, "0.645198")
        assert _within_ulp(e3, "0.761976")

    _criterion(capsys, 2, "two-expansion points", 1.0, body)


def test_criterion_3_exact_counts_and_infinite_point(capsys):
    def body():
        F = qf_field()
        for k in range(1, 9):
            x = eval_word(_member(k), F)
            assert count_expansions(x) == Cardinality.finite(k), f"k={k}"
        x = eval_word(parse_word("1(0)*"), F)
        assert count_expansions(x) == Cardinality.aleph0()
        words, complete = bfs_expansions(x, max_count=6)
        assert not complete
        assert tuple(str(w) for w in words) == fixtures.ALEPH0_FIRST_SIX

    _criterion(capsys, 3, "exact counts and the infinite point", 5.0, body)


def test_criterion_4_iterate_tables(capsys):
    def body():
        for table_id in ("T1", "T2", "T3", "T4"):
            result = check_table(table_id)
            assert result.passed, result.witness

    _criterion(capsys, 4, "iterate tables at ±1e-6", 5.0, body)


def test_criterion_5_orbit_identities(capsys):
    def body():
        result = check_orbit_identities(50)
        assert result.passed, result.witness
        assert "cancellation certified" in result.witness

    _criterion(capsys, 5, "orbit identities to j=50", 5.0, body)


def test_criterion_6_endpoint_inequalities(capsys):
    def body():
        for result in (check_no_triple(), check_tail_bounds()):
            assert result.passed, result.witness

    _criterion(capsys, 6, "exact endpoint inequalities", 1.0, body)


def test_criterion_7_prefix_oracle_equivalence(capsys):
    def body():
        rng = random.Random(20260816)
        nice = ((1, 0), (0, 1), (0,), (1,))
        bases = (q2_field(), qf_field())
        found = tries = 0
        while found < 200:
            tries += 1
            F = bases[tries % 2]
            pre = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 6)))
            if rng.random() < 0.5:
                per = rng.choice(nice)
            else:
                per = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 4)))
            x = eval_word(PeriodicWord(pre, per), F)
            card = count_expansions(x, **_CAPS)
            if card.kind != "finite":
                continue
            k = card.count
            words, complete = bfs_expansions(x, max_count=256, **_CAPS)
            assert complete and len(words) == k
            counts = viable_prefix_counts(x, 40)
            assert counts[-1] == k, f"oracle at depth 40: {counts[-1]} != {k}"
            for n in range(1, 41):
                assert counts[n - 1] == len({w.digits(n) for w in words})
            found += 1

    _criterion(capsys, 7, "prefix-count oracle on 200 random points", 60.0, body)


def _complemented(words):
    return sorted(reflect_word(w) for w in words)


def test_criterion_8_reflection_symmetry(capsys):
    def body():
        q2, qf = q2_field(), qf_field()
        witnesses = [
            (parse_word(t), q2)
            for t in (
                "01(10)*", "10000(10)*", "0111(10)*", "100(10)*",
                "0(10)*", "1(10)*", "00(10)*", "111(10)*", "(0)*", "(1)*",
            )
        ]
        witnesses += [(_member(k), qf) for k in range(1, 7)]
        witnesses += [(parse_word("1(0)*"), qf)]

        def check_pair(word, F):
            x = eval_word(word, F)
            y = reflect_point(x)
            assert y == eval_word(reflect_word(word), F)
            cx = count_expansions(x, **_CAPS)
            cy = count_expansions(y, **_CAPS)
            if cx.kind == "lower_bound" or cy.kind == "lower_bound":
                return False
            assert cx == cy, f"{word}: {cx} != {cy}"
            if cx.kind == "finite":
                ex = enumerate_expansions(x, max_count=256, **_CAPS)
                ey = enumerate_expansions(y, max_count=256, **_CAPS)
                assert len(ex) == len(ey) == cx.count
                assert ey == _complemented(ex)
            return True

        for word, F in witnesses:
            assert check_pair(word, F), f"witness {word} did not resolve"

        rng = random.Random(8)
        found = tries = 0
        while found < 100:
            tries += 1
            F = (q2, qf)[tries % 2]
            pre = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 6)))
            per = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 4)))
            if check_pair(PeriodicWord(pre, per), F):
                found += 1

    _criterion(capsys, 8, "reflection symmetry of counts and listings", 30.0, body)
