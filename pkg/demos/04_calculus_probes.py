#!/usr/bin/env python3
"""Calculus with infinitesimals, the cheap way.

Real functions extend to quantities pointwise; derivatives are difference
quotients against infinitesimal probes; continuity questions become decay
checks along probe sequences.  Failures come with concrete witness indices
and are proofs; "holds" is evidence up to the horizon.
"""

from fractions import Fraction as F

from seqring import (
    BUILTINS,
    ExpPoly,
    Quantity,
    RealFunction,
    add,
    continuity_probe,
    derivative,
    eval_at,
    extend,
    pow_int,
    standard_part,
    uniform_continuity_probe,
)

N = Quantity.closed(ExpPoly.single(1, 1, 1))
square = RealFunction("square", lambda x: x * x)

print("== extension: apply a function index by index ==")
squared = extend(square, N)
print("  square(N) starts:", [str(eval_at(squared, n)) for n in range(1, 6)])

print("\n== exact standard parts of finite closed forms ==")
geo = Quantity.closed(ExpPoly({(F(1), 0): F(2), (F(1, 2), 0): F(-2)}))
print("  st(2 - 2*(1/2)^n) =", standard_part(geo))
print("  st(1/N)           =", standard_part(pow_int(N, -1)))

print("\n== estimated standard parts of lazy sequences ==")
from math import isqrt

sqrt2 = Quantity.lazy(lambda n: F(isqrt(2 * 10 ** (2 * n)), 10**n), "sqrt2 digits")
est = standard_part(sqrt2)
print(f"  st(sqrt2 digits) ~ {float(est.value):.12f}  spread {float(est.achieved_spread):.2e}")

print("\n== derivatives as difference quotients ==")
est = derivative(square, 3)
print(f"  d(x^2)/dx at 3 ~ {float(est.value):.6f}  (exact quotient is 6 + 1/n)")
est = derivative(BUILTINS["sin"], 0)
print(f"  d(sin)/dx at 0 ~ {float(est.value):.9f}")

# At a kink the quotient never settles; the spread announces it.
alternating = Quantity.closed(ExpPoly.single(1, -1, -1))  # (-1)^n / n
est = derivative(BUILTINS["abs"], 0, probe=alternating)
print(f"  d|x|/dx at 0 along (-1)^n/n: value {est.value}, spread {est.achieved_spread}")

print("\n== continuity probes ==")
print("  x^2 at 3:", continuity_probe(square, 3).status)
v = continuity_probe(BUILTINS["step"], 0)
print(f"  step at 0: {v.status} (witness index {v.witness})")

print("\n== uniform continuity fails for x^2 at infinity ==")
pair = add(N, pow_int(N, -1))  # N and N + 1/N are infinitely close
v = uniform_continuity_probe(square, N, pair)
w = v.witness
print(f"  x^2 on (N, N + 1/N): {v.status}, gap at witness = {(F(w) + F(1, w))**2 - F(w)**2}")
v = uniform_continuity_probe(RealFunction("id", lambda x: x), N, pair)
print("  identity on the same pair:", v.status)
v = uniform_continuity_probe(BUILTINS["sin"], N, pair, tol=F(1, 1000))
print("  sin on the same pair (tol 1/1000):", v.status)
