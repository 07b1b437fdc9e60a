#!/usr/bin/env python3
"""Comparing infinite quantities: equality and order modulo finite prefixes.

Two sequences are equal when they agree at all but finitely many indices,
and ordered when one is strictly below the other from some index on.  On
closed forms both questions are decided exactly; the order is only partial,
and the infinitely-smaller/greater relations grade quantities into a whole
hierarchy of infinities.
"""

from fractions import Fraction as F

from seqring import (
    Comparison,
    ExpPoly,
    Quantity,
    add,
    classify,
    compare,
    compare_lazy,
    embed_scalar,
    infinitely_close,
    infinitely_greater,
    is_infinitely_great,
    is_infinitely_small,
    mul,
    patch,
    pow_int,
    proportionality_constant,
)

N = Quantity.closed(ExpPoly.single(1, 1, 1))

print("== equality ignores finite prefixes ==")
edited = patch(N, {1: F(99), 7: F(0)})
print("N with two overrides vs N:", compare(edited, N).value)

print("\n== the order is partial ==")
print("N vs N^2:          ", compare(N, mul(N, N)).value)
osc = Quantity.closed(ExpPoly({(F(1), 0): F(1, 2), (F(-1), 0): F(-1, 2)}))  # (1,0,1,0,...)
print("(1,0,1,0,...) vs 0:", compare(osc, embed_scalar(0)).value)

print("\n== non-Archimedean: N tops every constant ==")
print("is N infinitely great?", is_infinitely_great(N) == 1)
print("1000000 vs N:", compare(embed_scalar(10**6), N).value)

print("\n== the hierarchy of infinities ==")
square, cube = mul(N, N), mul(N, mul(N, N))
print("N^2 infinitely greater than N:  ", infinitely_greater(square, N))
print("N^3 infinitely greater than N^2:", infinitely_greater(cube, square))
print("N   infinitely greater than N:  ", infinitely_greater(N, N))

print("\n== and of infinitesimals ==")
recip = pow_int(N, -1)
print("1/N infinitely small:  ", is_infinitely_small(recip))
print("1/N^2 << 1/N:          ", infinitely_greater(recip, mul(recip, recip)))
print("N and N + 1/N are infinitely close:", infinitely_close(N, add(N, recip)))

print("\n== ratios survive at infinity ==")
print("3N : 5N =", proportionality_constant(3 * N, 5 * N))
print("N^2 : N  =", proportionality_constant(square, N))

print("\n== classification ==")
for label, q in [
    ("zero", embed_scalar(0)),
    ("1/N", recip),
    ("2 - 2*(1/2)^n", Quantity.closed(ExpPoly({(F(1), 0): F(2), (F(1, 2), 0): F(-2)}))),
    ("N^2", square),
    ("-N", -N),
    ("(-1)^n", Quantity.closed(ExpPoly.single(1, 0, -1))),
]:
    c = classify(q)
    extra = f" with standard part {c.standard_part}" if c.standard_part is not None else ""
    print(f"  {label:16} -> {c.kind}{extra}")

print("\n== lazy sequences get horizon verdicts, not exact answers ==")
from math import isqrt

sqrt2 = Quantity.lazy(lambda n: F(isqrt(2 * 10 ** (2 * n)), 10**n), "sqrt2 digits")
v = compare_lazy(sqrt2, embed_scalar(F(3, 2)), Comparison.LESS, horizon=10_000)
print("sqrt2 truncations < 3/2:", v.status, "up to index", v.checked_up_to)
v = compare_lazy(N, embed_scalar(10), Comparison.LESS, horizon=10_000)
print("N < 10:", v.status, "witness index", v.witness)
