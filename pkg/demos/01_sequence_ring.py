#!/usr/bin/env python3
"""Sequences as single quantities: the pointwise ring and its quirks.

A quantity is a whole infinite sequence of exact rationals treated as one
value.  Closed forms (sums of c*n^k*b^n plus finitely many index overrides)
stay closed under + and *, so everything here is exact.
"""

from fractions import Fraction as F

from seqring import (
    ExpPoly,
    Quantity,
    Term,
    add,
    canonicalize,
    delay,
    embed_scalar,
    eval_at,
    mul,
    neg,
    patch,
    pow_int,
)

def show(label, q, count=8):
    values = ", ".join(str(eval_at(q, n)) for n in range(1, count + 1))
    print(f"{label:28} {q.render():42} ({values}, ...)")

# The identity sequence (1, 2, 3, ...) is the archetypal infinite quantity.
N = Quantity.closed(ExpPoly.single(1, 1, 1))
show("N", N)

# Scalars embed as constant sequences; arithmetic is pointwise.
show("7", embed_scalar(7))
show("N + N", add(N, N))
show("N * N", mul(N, N))
show("-N", neg(N))
show("3*N + 1/2", 3 * N + F(1, 2))

# 1/N: the canonical infinitesimal, the exact pointwise reciprocal of N.
show("1/N", pow_int(N, -1))

# Finite prefix edits never matter later: delay shifts in zeros, patch
# overrides single indices.
show("delay(N, 2)", delay(N, 2))
show("patch(N, {1: 99})", patch(N, {1: F(99)}))

# Exponential closed forms cover geometric behavior...
half = Quantity.closed(ExpPoly.single(1, 0, F(1, 2)))
show("(1/2)^n", half)

# ... and oscillators.  These two are (1,0,1,0,...) and (0,1,0,1,...):
osc_a = Quantity.closed(canonicalize([Term(F(1, 2), 0, F(1)), Term(F(-1, 2), 0, F(-1))]))
osc_b = Quantity.closed(canonicalize([Term(F(1, 2), 0, F(1)), Term(F(1, 2), 0, F(-1))]))
show("(1,0,1,0,...)", osc_a)
show("(0,1,0,1,...)", osc_b)

# Their product cancels exactly: the ring has zero divisors, so it is not a
# field and there is no general division (hence reciprocals only of single
# terms, like 1/N above).
product = mul(osc_a, osc_b)
show("their product", product)
print("\nproduct canonicalizes to the empty form:", product.body.is_zero)

# Arbitrary sequences enter as lazy quantities; arithmetic then lowers to
# lazy and stays exact pointwise.
from math import isqrt

sqrt2 = Quantity.lazy(lambda n: F(isqrt(2 * 10 ** (2 * n)), 10**n), "sqrt2 digits")
mixed = add(sqrt2, N)
print("\nlazy sqrt2 truncations plus N at n = 3:", eval_at(mixed, 3))
