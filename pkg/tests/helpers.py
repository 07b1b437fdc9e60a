"""Shared generators and independent oracles for the test suite.

The oracles here never call the code paths they check: sums are brute-force
loops over sequence values, comparisons are pointwise big-integer evaluation,
and sqrt(2) digits come from integer square roots.
"""

from __future__ import annotations

import random
from fractions import Fraction as F
from math import isqrt

from seqring import ExpPoly, Quantity, eval_at

ALL_BASES = [F(1), F(-1), F(1, 2), F(-1, 2), F(2), F(-2), F(3, 4), F(-3, 4)]
PM1_BASES = [F(1), F(-1)]


def random_poly(
    rng: random.Random,
    max_terms: int = 2,
    bases=ALL_BASES,
    pow_lo: int = -2,
    pow_hi: int = 3,
    coeff_max: int = 9,
) -> ExpPoly:
    terms: dict = {}
    for _ in range(rng.randint(0, max_terms)):
        key = (rng.choice(bases), rng.randint(pow_lo, pow_hi))
        c = F(rng.randint(-coeff_max, coeff_max))
        terms[key] = terms.get(key, F(0)) + c
    return ExpPoly(terms)


def random_quantity(rng: random.Random, with_patch: bool = False, **kwargs) -> Quantity:
    body = random_poly(rng, **kwargs)
    patch = {}
    if with_patch and rng.random() < 0.5:
        for _ in range(rng.randint(1, 3)):
            patch[rng.randint(1, 100)] = F(rng.randint(-50, 50))
    return Quantity.closed(body, patch)


def random_patch(rng: random.Random, max_index: int = 100) -> dict:
    return {
        rng.randint(1, max_index): F(rng.randint(-50, 50))
        for _ in range(rng.randint(1, 3))
    }


def brute_partial_sum(term: ExpPoly, n: int, start: int = 1) -> F:
    """Independent summation oracle: add term values one index at a time."""
    total = F(0)
    for k in range(start, n + 1):
        total += term.value_at(k)
    return total


def pointwise_verdict(q1: Quantity, q2: Quantity, indices) -> str:
    """Pointwise comparison oracle: 'less'/'greater'/'equal' if uniform, else 'mixed'."""
    seen = set()
    for n in indices:
        a, b = eval_at(q1, n), eval_at(q2, n)
        seen.add("less" if a < b else "greater" if a > b else "equal")
    return seen.pop() if len(seen) == 1 else "mixed"


def lex_poly_compare(p1: ExpPoly, p2: ExpPoly) -> str:
    """Descending-lexicographic coefficient comparison for base-1 polynomials."""
    degree = max(
        [k for (_, k), _ in p1.items()] + [k for (_, k), _ in p2.items()] + [0]
    )
    for k in range(degree, -1, -1):
        a, b = p1.coeff(1, k), p2.coeff(1, k)
        if a != b:
            return "less" if a < b else "greater"
    return "equal"


def sqrt2_truncation(n: int) -> F:
    """First n decimal digits of sqrt(2), as an exact rational (truncated, not rounded)."""
    return F(isqrt(2 * 10 ** (2 * n)), 10**n)


def lazy_sqrt2() -> Quantity:
    return Quantity.lazy(sqrt2_truncation, "sqrt2 decimal truncations")


# Continued-fraction convergent of sqrt(2); |sqrt(2) - p/q| < 1/q^2 ~ 4.5e-12.
SQRT2_CONVERGENT = F(665857, 470832)
