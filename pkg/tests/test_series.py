"""Symbolic summation: Bernoulli table, Faulhaber sums, geometric power sums."""

import random
from fractions import Fraction as F

import pytest
from helpers import brute_partial_sum, random_poly

from seqring import (
    BaseOne,
    Comparison,
    DegreeCapExceeded,
    ExpPoly,
    NegativePowerTerm,
    Series,
    add,
    bernoulli_numbers,
    compare,
    embed_scalar,
    eval_at,
    faulhaber_sum,
    geometric_power_sum,
    geometric_series_sums,
    omit_first,
    partial_sums,
)

SERIES_BASES = [F(1), F(1, 2), F(2), F(3, 4)]


def test_bernoulli_prefix():
    # recurrence-forced values, checked against the hand-computed prefix
    expected = [
        F(1),
        F(-1, 2),
        F(1, 6),
        F(0),
        F(-1, 30),
        F(0),
        F(1, 42),
        F(0),
        F(-1, 30),
        F(0),
        F(5, 66),
    ]
    assert list(bernoulli_numbers(10)) == expected


def test_faulhaber_degree_one():
    assert faulhaber_sum(1) == ExpPoly({(F(1), 2): F(1, 2), (F(1), 1): F(1, 2)})


def test_faulhaber_degree_two():
    assert faulhaber_sum(2) == ExpPoly(
        {(F(1), 3): F(1, 3), (F(1), 2): F(1, 2), (F(1), 1): F(1, 6)}
    )


def test_faulhaber_degree_three():
    # oracle: sum of cubes equals n^2 (n+1)^2 / 4, brute-checked to n = 50
    cubes = faulhaber_sum(3)
    assert cubes == ExpPoly({(F(1), 4): F(1, 4), (F(1), 3): F(1, 2), (F(1), 2): F(1, 4)})
    for n in range(1, 51):
        brute = sum(F(k) ** 3 for k in range(1, n + 1))
        assert cubes.value_at(n) == brute == F(n * n * (n + 1) * (n + 1), 4)


def test_faulhaber_cap():
    with pytest.raises(DegreeCapExceeded):
        faulhaber_sum(17)


def test_faulhaber_telescopes():
    for j in range(0, 11):
        fs = faulhaber_sum(j)
        for n in range(2, 201):
            assert fs.value_at(n) - fs.value_at(n - 1) == F(n) ** j


def test_geometric_base_half():
    assert geometric_power_sum(0, F(1, 2)) == ExpPoly(
        {(F(1), 0): F(1), (F(1, 2), 0): F(-1)}
    )


def test_geometric_base_two():
    # brute force to n = 30: 2 + 4 + ... + 2^n = 2^(n+1) - 2
    got = geometric_power_sum(0, F(2))
    assert got == ExpPoly({(F(2), 0): F(2), (F(1), 0): F(-2)})
    for n in range(1, 31):
        assert got.value_at(n) == sum(F(2) ** k for k in range(1, n + 1))


def test_geometric_linear_weight():
    got = geometric_power_sum(1, F(1, 2))
    for n in range(1, 31):
        assert got.value_at(n) == sum(F(k) * F(1, 2) ** k for k in range(1, n + 1))


def test_geometric_rejects_base_one():
    with pytest.raises(BaseOne):
        geometric_power_sum(2, F(1))


def test_geometric_random_against_brute_force():
    rng = random.Random(30)
    for _ in range(20):
        j = rng.randint(0, 5)
        b = rng.choice([F(1, 2), F(2), F(3, 4), F(-1, 2), F(5, 3)])
        got = geometric_power_sum(j, b)
        for n in range(1, 41):
            assert got.value_at(n) == sum(F(k) ** j * b**k for k in range(1, n + 1))


# ------------------------------------------------------------------
# partial_sums / omit_first
# ------------------------------------------------------------------

def test_ones_sum_to_identity():
    q = partial_sums(Series(ExpPoly.constant(1)))
    assert q.body == ExpPoly.single(1, 1, 1)


def test_identity_sums_to_triangulars():
    q = partial_sums(Series(ExpPoly.single(1, 1, 1)))
    assert q.body == ExpPoly({(F(1), 2): F(1, 2), (F(1), 1): F(1, 2)})


def test_squares_sum_to_pyramidals():
    q = partial_sums(Series(ExpPoly.single(1, 2, 1)))
    assert q.body == ExpPoly(
        {(F(1), 3): F(1, 3), (F(1), 2): F(1, 2), (F(1), 1): F(1, 6)}
    )
    assert [eval_at(q, n) for n in range(1, 5)] == [1, 5, 14, 30]


def test_partial_sums_rejects_negative_powers():
    with pytest.raises(NegativePowerTerm):
        partial_sums(Series(ExpPoly.single(1, -1, 1)))


def test_partial_sums_with_later_start():
    s = Series(ExpPoly.single(1, 1, 1), start=4)
    q = partial_sums(s)
    for n in range(1, 31):
        assert eval_at(q, n) == brute_partial_sum(s.term, n, start=4)


def test_partial_sums_random_corpus():
    rng = random.Random(31)
    for _ in range(25):
        term = random_poly(rng, max_terms=3, bases=SERIES_BASES, pow_lo=0, pow_hi=4)
        q = partial_sums(Series(term))
        running = F(0)
        for n in range(1, 201):
            running += term.value_at(n)
            assert eval_at(q, n) == running


def test_partial_sums_linear():
    rng = random.Random(32)
    for _ in range(20):
        t1 = random_poly(rng, max_terms=2, bases=SERIES_BASES, pow_lo=0, pow_hi=4)
        t2 = random_poly(rng, max_terms=2, bases=SERIES_BASES, pow_lo=0, pow_hi=4)
        combined = partial_sums(Series(t1 + t2))
        split = add(partial_sums(Series(t1)), partial_sums(Series(t2)))
        assert combined.body == split.body


def test_omit_first_of_ones():
    q = omit_first(Series(ExpPoly.constant(1)), 2)
    assert [eval_at(q, n) for n in range(1, 6)] == [0, 0, 1, 2, 3]


def test_omit_zero_is_partial_sums():
    s = Series(ExpPoly.single(1, 1, 1))
    assert omit_first(s, 0) == partial_sums(s)


def test_omitted_prefix_completes_the_whole():
    s = Series(ExpPoly.constant(1))
    whole = partial_sums(s)
    for m in (1, 5, 50):
        rejoined = add(embed_scalar(m), omit_first(s, m))
        assert compare(rejoined, whole) is Comparison.EQUAL


def test_omit_first_brute_force():
    rng = random.Random(33)
    for _ in range(10):
        term = random_poly(rng, max_terms=2, bases=SERIES_BASES, pow_lo=0, pow_hi=3)
        m = rng.randint(1, 8)
        q = omit_first(Series(term), m)
        for n in range(1, 61):
            expected = F(0) if n <= m else brute_partial_sum(term, n) - brute_partial_sum(term, m)
            assert eval_at(q, n) == expected


# ------------------------------------------------------------------
# geometric_series_sums (the unit-led geometric series)
# ------------------------------------------------------------------

def test_geom_partial_sums_closed_form():
    for e in (F(1, 2), F(3, 4), F(9, 10)):
        q = geometric_series_sums(e)
        for n in range(1, 31):
            assert eval_at(q, n) == (1 - e**n) / (1 - e)


def test_geom_degenerate_bases():
    assert geometric_series_sums(F(0)) == embed_scalar(1)
    q = geometric_series_sums(F(1))
    assert q.body == ExpPoly.single(1, 1, 1)
