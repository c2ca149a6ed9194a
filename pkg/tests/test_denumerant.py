import itertools

import pytest
from hypothesis import given, strategies as st

from jfrob.core import LimitTooLarge, make_tuple, tuple_sum
from jfrob.denumerant import (
    denumerant,
    denumerant_table,
    positive_denumerant,
    positive_denumerant_table,
)
from jfrob.oracle import count_representations

from strategies import tuples


def brute_count(gens, n, lo=0):
    ranges = [range(lo, n // a + 1) for a in gens]
    return sum(1 for xs in itertools.product(*ranges) if sum(a * x for a, x in zip(gens, xs)) == n)


def test_table_corollary_values():
    # p_{1,1,5}: k+1 below m, m+2 at m
    assert denumerant_table(make_tuple([1, 1, 5]), 5, 100).tolist() == [1, 2, 3, 4, 5, 7]


def test_table_below_min_generator():
    assert denumerant_table(make_tuple([3, 5, 8]), 2, 10).tolist() == [1, 0, 0]


def test_table_count_16():
    t = make_tuple([3, 5, 8])
    assert brute_count((3, 5, 8), 16) == 3
    assert denumerant_table(t, 16, 10)[16] == 3


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 0)])
def test_denumerant_small(n, expected):
    assert denumerant(make_tuple([3, 5, 8]), n) == expected


def test_denumerant_corollary_m7():
    assert denumerant(make_tuple([1, 1, 7]), 7) == 9


def test_denumerant_is_exact_beyond_int64():
    t = make_tuple([1, 1, 1, 1, 1, 1, 1, 1])
    # C(n + 7, 7) with n = 10**4 exceeds 2**63
    n = 10_000
    from math import comb

    assert denumerant(t, n) == comb(n + 7, 7) > 2**63


@pytest.mark.parametrize("n,expected", [(16, 1), (15, 0), (32, 3)])
def test_positive_denumerant(n, expected):
    t = make_tuple([3, 5, 8])
    assert positive_denumerant(t, n) == expected
    assert brute_count((3, 5, 8), n, lo=1) == expected


def test_limit_budget():
    with pytest.raises(LimitTooLarge):
        denumerant_table(make_tuple([3, 5]), 1000, 5, max_entries=100)


def test_table_immutable():
    s = denumerant_table(make_tuple([3, 5]), 20, 5)
    with pytest.raises(ValueError):
        s.counts[0] = 7


@given(tuples(max_gen=12), st.integers(0, 60), st.integers(1, 8))
def test_saturation_consistency(t, limit, cap):
    s = denumerant_table(t, limit, cap)
    assert s.counts[0] == 1
    assert s.tolist() == [min(cap, denumerant(t, n)) for n in range(limit + 1)]


@given(tuples(max_gen=12), st.integers(0, 80))
def test_positive_table_matches_shift(t, limit):
    s = positive_denumerant_table(t, limit, 1 << 30)
    assert s.tolist() == [positive_denumerant(t, n) for n in range(limit + 1)]


@given(tuples(max_gen=15), st.integers(0, 80))
def test_shift_monotonicity(t, n):
    for a in t:
        assert denumerant(t, n + a) >= denumerant(t, n)


@given(tuples(max_gen=15), st.integers(0, 80), st.randoms())
def test_permutation_invariance(t, n, rnd):
    gens = list(t)
    rnd.shuffle(gens)
    assert denumerant(make_tuple(gens), n) == denumerant(t, n)


@given(tuples(max_k=3, max_gen=10), st.integers(0, 40))
def test_matches_oracle(t, n):
    assert denumerant(t, n) == count_representations(t, n)
    assert positive_denumerant(t, n) == count_representations(t, n, positive_only=True)


def test_oracle_equivalence_to_300():
    for gens in [(3, 5, 8), (2, 5, 7), (1, 1, 5), (4, 7, 19), (6, 10, 15)]:
        t = make_tuple(gens)
        table = denumerant_table(t, 300, 1 << 30).tolist()
        assert table == [count_representations(t, n) for n in range(301)]
        K = tuple_sum(t)
        assert all(positive_denumerant(t, n) == denumerant(t, n - K) for n in range(K, 301))
