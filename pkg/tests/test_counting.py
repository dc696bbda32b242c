from itertools import product

import pytest
from hypothesis import given, strategies as st

from simplicial_codes.counting import (CountingParams, s_sizes, s_sizes_bruteforce,
                                       t_sizes, t_sizes_bruteforce, t_total)
from simplicial_codes.subsets import SubsetMask

from oracles import vectors


def P(m, a, b):
    return CountingParams.from_elements(m, a, b)


def oracle_counts(m, A, B):
    """Counts straight from the set definitions, on 0/1 tuples."""
    def disjoint(x, s):
        return all(not (p and q) for p, q in zip(x, s))

    zero = (0,) * m
    vs = vectors(m)
    s1 = sum(1 for x in vs if x != zero and disjoint(x, A) and disjoint(x, B))
    s0 = sum(1 for x in vs if not (disjoint(x, A) and disjoint(x, B)))
    t = [0, 0, 0]
    for x, y in product(vs, repeat=2):
        if x == zero or y == zero or x == y or not disjoint(y, B):
            continue
        xy = tuple((p + q) % 2 for p, q in zip(x, y))
        t[disjoint(x, A) + disjoint(xy, A)] += 1
    return (s1, s0), (t[2], t[1], t[0])


def test_s_examples():
    assert s_sizes(P(3, [1], [2]))[0] == 1
    for m in range(1, 6):
        assert s_sizes(P(m, [], [])) == (2**m - 1, 0)


def test_t_example_full_overlap():
    t2, t1, _ = t_sizes(P(3, [1, 2], [1, 2]))
    assert (t2, t1) == (0, 0)
    assert t_sizes_bruteforce(P(3, [1, 2], [1, 2]))[:2] == (0, 0)


@pytest.mark.parametrize("m", range(1, 5))
def test_closed_forms_match_definition_oracle(m):
    for a, b in product(range(1 << m), repeat=2):
        A = tuple((a >> i) & 1 for i in range(m))
        B = tuple((b >> i) & 1 for i in range(m))
        p = CountingParams(m, SubsetMask(m, a), SubsetMask(m, b))
        s, t = oracle_counts(m, A, B)
        assert s_sizes(p) == s == s_sizes_bruteforce(p)
        assert t_sizes(p) == t == t_sizes_bruteforce(p)


@pytest.mark.parametrize("m", [5, 6])
def test_closed_forms_match_bruteforce(m):
    for a, b in product(range(1 << m), repeat=2):
        p = CountingParams(m, SubsetMask(m, a), SubsetMask(m, b))
        assert s_sizes(p) == s_sizes_bruteforce(p)
        assert t_sizes(p) == t_sizes_bruteforce(p)


@given(st.integers(1, 30).flatmap(
    lambda m: st.tuples(st.just(m), st.integers(0, 2**m - 1), st.integers(0, 2**m - 1))))
def test_total_identity_and_nonnegative(data):
    m, a, b = data
    p = CountingParams(m, SubsetMask(m, a), SubsetMask(m, b))
    t = t_sizes(p)
    assert sum(t) == t_total(p) == (2 ** (m - len(p.B)) - 1) * (2**m - 2)
    assert min(t) >= 0 and min(s_sizes(p)) >= 0


def test_b_empty_specialization():
    # with B = ∅ the three counts are functions of |A| alone
    m = 5
    for a in range(m + 1):
        t2, t1, t0 = t_sizes(P(m, list(range(1, a + 1)), []))
        k = 2 ** (m - a)
        assert t2 == (k - 1) * (k - 2)
        assert t1 == 2 * (k - 1) * (2**m - k)
        assert t0 == (2**m - k) * (2**m - k - 1)


def test_parallel_bruteforce_same_result():
    p = P(6, [1, 2], [2, 5])
    assert t_sizes_bruteforce(p, workers=3) == t_sizes_bruteforce(p) == t_sizes(p)


def test_bruteforce_cap():
    with pytest.raises(ValueError):
        t_sizes_bruteforce(P(11, [1], [2]))
