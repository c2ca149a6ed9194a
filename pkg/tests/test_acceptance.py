"""Exit criteria for the solver.

Each ``criterion_N`` returns ``(ok, report)``; the report is a deterministic
text rendering of what was checked, so criterion 10 can compare reruns byte
for byte.  Run directly (``python tests/test_acceptance.py``) or via pytest;
either way one PASS/FAIL line per criterion is printed.
"""
from __future__ import annotations

import time
from math import gcd

import pytest

from jfrob import jfrobenius, oracle
from jfrob.cli import run as cli_run
from jfrob.core import JFrobeniusValue, make_tuple, tuple_sum
from jfrob.corpus import random_reducible_tuples, random_tuples
from jfrob.denumerant import denumerant, denumerant_table, exact_counts
from jfrob.reduction import find_reduction

T = make_tuple
RESULTS: dict[int, tuple[bool, float, str]] = {}

REMARK_PAIRS = [
    ((3, 5, 8), 14, 52, 51),
    ((3, 10, 16), 14, 107, 105),
    ((2, 5, 7), 17, 43, 42),
    ((2, 5, 17), 38, 103, 102),
    ((4, 7, 19), 35, 181, 180),
    ((9, 11, 20), 38, 376, 369),
]

REDUCIBLE = dict(count=100, max_gen=60, ks=(3, 4), seed=20081)
TIME_LIMITS = {1: 10, 2: 60, 3: 60, 4: 30, 6: 120, 9: 120}


def _map_ext(v, fn):
    return None if v is None else fn(v)


def criterion_1():
    lines, ok = [], True
    for gens, j, a, b in REMARK_PAIRS:
        vals = jfrobenius.g_sequence(T(gens), j + 1).values
        got = (vals[j].as_int(), vals[j + 1].as_int())
        ok &= got == (a, b)
        lines.append(f"{gens} g_{j},g_{j + 1} = {got} expected {(a, b)}")
    return ok, "\n".join(lines)


def _reducible_corpus():
    corpus = random_reducible_tuples(**REDUCIBLE)
    assert all(t.gcd == 1 and any(find_reduction(t, p) for p in range(t.k)) for t in corpus)
    return corpus


def criterion_2():
    """Direct g_j equals the gcd-reduction transform of the reduced tuple's g_j.

    The transform is applied to the reduced tuple's value in the convention
    the closed forms use (g_0 may be -1, g_1 may be 0); the resulting
    positive/absent value must equal the direct one exactly.  Cases where
    reading the reduced side as a bare absent sentinel would disagree are
    counted and reported, not hidden.
    """
    J, checked, mismatches, sentinel_gaps = 10, 0, 0, 0
    for t in _reducible_corpus():
        direct = jfrobenius.g_sequence(t, J)
        for p in range(t.k):
            step = find_reduction(t, p)
            if step is None:
                continue
            red = jfrobenius.g_sequence(step.reduced_tuple, J)
            for j in range(J + 1):
                checked += 1
                mapped = JFrobeniusValue.from_extended(_map_ext(red.extended[j], step.apply), j)
                if mapped != direct.values[j] or _map_ext(red.extended[j], step.apply) != direct.extended[j]:
                    mismatches += 1
                if not red.values[j].exists and direct.values[j].exists:
                    sentinel_gaps += 1
                    # only possible when the reduced value is -1 (j = 0) or 0 (j = 1)
                    if red.extended[j] not in (-1, 0):
                        mismatches += 1
    report = f"pairs checked={checked} mismatches={mismatches} reduced-side sentinel gaps={sentinel_gaps}"
    return mismatches == 0, report


def criterion_3():
    J, checked, mismatches, edge = 10, 0, 0, 0
    for t in _reducible_corpus():
        K = tuple_sum(t)
        g = jfrobenius.g_sequence(t, J)
        f = jfrobenius.f_sequence(t, J)
        for p in range(t.k):
            step = find_reduction(t, p)
            if step is None:
                continue
            rf = jfrobenius.f_sequence(step.reduced_tuple, J)
            for j in range(J + 1):
                checked += 1
                scaled = _map_ext(rf.extended[j], lambda v: step.divisor * v)
                if scaled != f.extended[j]:
                    mismatches += 1
                if JFrobeniusValue.from_extended(scaled, j, "f") != f.values[j]:
                    mismatches += 1
        for j in range(J + 1):
            gv, fv = g.values[j], f.values[j]
            if gv.exists or fv.exists:
                checked += 1
                if gv.exists:
                    mismatches += not (fv.exists and fv.value == gv.value + K)
                else:
                    # f exists while g does not: only when g's value is -1 or 0
                    edge += 1
                    mismatches += not (g.extended[j] in (-1, 0) and fv.value == g.extended[j] + K)
            else:
                mismatches += not (g.extended[j] is None and f.extended[j] is None)
    report = f"relations checked={checked} mismatches={mismatches} f-present-g-absent edge cases={edge}"
    return mismatches == 0, report


def criterion_4():
    lines, ok = [], True
    for a1 in range(1, 8):
        for a2 in range(a1 + 1, 8):
            if gcd(a1, a2) != 1:
                continue
            for m in range(1, 5):
                vals = jfrobenius.g_sequence(T([a1, a2, m * a1 * a2]), m + 2).values
                expected = [(j + 1) * a1 * a2 - a1 - a2 for j in range(m + 1)]
                expected += [0, (m + 2) * a1 * a2 - a1 - a2]
                # the closed form assumes g_j != 0; a non-positive value means absent
                expected = [max(v, 0) for v in expected]
                got = [v.as_int() for v in vals]
                ok &= got == expected and not vals[m + 1].exists
                lines.append(f"({a1},{a2},{m * a1 * a2}) {got}")
    return ok, "\n".join(lines)


def criterion_5():
    ok, lines = True, []
    for m in range(1, 11):
        got = [denumerant(T([1, 1, m]), k) for k in range(m + 1)]
        ok &= got == [k + 1 for k in range(m)] + [m + 2]
        lines.append(f"m={m} {got}")
    return ok, "\n".join(lines)


def criterion_6():
    bad_counts = 0
    for t in random_tuples(20, 25, seed=606):
        table = denumerant_table(t, 300, 1 << 30).tolist()
        bad_counts += sum(table[n] != oracle.count_representations(t, n) for n in range(301))
    bad_g = 0
    small = random_tuples(20, 20, seed=607)
    for t in small:
        vals = jfrobenius.g_sequence(t, 8).values
        bad_g += sum(oracle.oracle_g_j(t, j) != vals[j] for j in range(9))
    report = f"count mismatches={bad_counts} (20 tuples, n<=300); g_j mismatches={bad_g} ({len(small)} tuples, j<=8)"
    return bad_counts == 0 and bad_g == 0, report


def criterion_7():
    bad = 0
    tuples = random_tuples(20, 30, seed=707)
    for t in tuples:
        d = exact_counts(t, 500 + t.a_max)
        bad += sum(d[n + a] < d[n] for n in range(501) for a in t)
    return bad == 0, f"violations={bad} over {len(tuples)} tuples, n<=500"


def criterion_8():
    applicable = failed = 0
    for t in random_tuples(20, 15, ks=(2, 3, 4), seed=808):
        f = jfrobenius.f_sequence(t, 8)
        for j in range(9):
            res = oracle.verify_lemma_witness(t, j, 0, f.values[j])
            applicable += res.status != "not_applicable"
            failed += res.status == "failed"
    return failed == 0 and applicable > 0, f"witnesses sought={applicable} failed={failed}"


def criterion_9(workers: int = 1):
    out: list[str] = []
    argv = ["check-conjecture", "--k", "3", "--max-gen", "12", "--format", "json", "--workers", str(workers)]
    code = cli_run(argv, out=out.append)
    text = "\n".join(out)
    import json

    summary = json.loads(text.splitlines()[0])
    return code == 0 and summary["counterexamples"] == 0, text


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def _run(n: int):
    start = time.perf_counter()
    ok, report = CRITERIA[n]()
    elapsed = time.perf_counter() - start
    limit = TIME_LIMITS.get(n)
    if limit is not None and elapsed >= limit:
        ok = False
        report += f"\ntime {elapsed:.1f}s exceeds {limit}s"
    RESULTS[n] = (ok, elapsed, report)
    return ok, elapsed, report


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, elapsed, report = _run(n)
    assert ok, report


def test_criterion_10_determinism():
    first = {n: RESULTS[n][2] if n in RESULTS else _run(n)[2] for n in CRITERIA}
    second = {n: CRITERIA[n]()[1] for n in CRITERIA if n != 9}
    second[9] = criterion_9(workers=2)[1]
    diff = [n for n in CRITERIA if first[n].split("\ntime ")[0] != second[n]]
    RESULTS[10] = (not diff, 0.0, f"differing criteria: {diff}")
    assert not diff


def summary_lines() -> list[str]:
    names = {
        1: "golden inversion pairs",
        2: "gcd reduction identity (g)",
        3: "scaling identity (f) + shift relation",
        4: "closed forms for (a1, a2, m*a1*a2)",
        5: "denumerant of (1, 1, m)",
        6: "DP / oracle equivalence",
        7: "shift monotonicity",
        8: "lemma witnesses",
        9: "g_1 > g_0 conjecture scan",
        10: "determinism",
    }
    out = []
    for n in sorted(RESULTS):
        ok, elapsed, report = RESULTS[n]
        detail = report.splitlines()[0] if report else ""
        out.append(f"criterion {n:>2} {'PASS' if ok else 'FAIL'} {elapsed:6.2f}s  {names[n]}: {detail}")
    return out


if __name__ == "__main__":
    for n in CRITERIA:
        _run(n)
    test_criterion_10_determinism()
    print("\n".join(summary_lines()))
