#!/usr/bin/env python3
"""From series to closed forms: exact symbolic summation.

A series is a term rule in k; its partial sums become a closed-form
quantity.  Power sums go through Faulhaber's formula (exact Bernoulli
numbers), geometric power sums through an exact triangular solve.
"""

from fractions import Fraction as F

from seqring import (
    Comparison,
    ExpPoly,
    Series,
    add,
    bernoulli_numbers,
    compare,
    embed_scalar,
    eval_at,
    faulhaber_sum,
    geometric_power_sum,
    geometric_series_sums,
    infinitely_greater,
    omit_first,
    partial_sums,
)

print("== Bernoulli numbers (exact) ==")
print(" ", ", ".join(str(b) for b in bernoulli_numbers(8)))

print("\n== power sums ==")
for j in range(0, 4):
    print(f"  sum k^{j} from 1 to n  =  {faulhaber_sum(j).render()}")

print("\n== geometric power sums ==")
print("  sum (1/2)^k        =", geometric_power_sum(0, F(1, 2)).render())
print("  sum 2^k            =", geometric_power_sum(0, F(2)).render())
print("  sum k*(1/2)^k      =", geometric_power_sum(1, F(1, 2)).render())

print("\n== series to quantities ==")
ones = Series(ExpPoly.constant(1))         # 1 + 1 + 1 + ...
naturals = Series(ExpPoly.single(1, 1, 1))  # 1 + 2 + 3 + ...
squares = Series(ExpPoly.single(1, 2, 1))   # 1 + 4 + 9 + ...
for label, s in [("ones", ones), ("naturals", naturals), ("squares", squares)]:
    q = partial_sums(s)
    values = ", ".join(str(eval_at(q, n)) for n in range(1, 6))
    print(f"  {label:9} -> {q.render():46} ({values}, ...)")

print("\n== dropping finitely many terms costs exactly their sum ==")
whole = partial_sums(ones)
for m in (1, 5, 50):
    tail = omit_first(ones, m)
    rejoined = add(embed_scalar(m), tail)
    print(f"  {m} + (ones from index {m+1}) == ones:",
          compare(rejoined, whole) is Comparison.EQUAL)

print("\n== the squares outgrow the naturals by every multiple ==")
p, s = partial_sums(naturals), partial_sums(squares)
print("  P < S:", compare(p, s).value)
print("  S infinitely greater than P:", infinitely_greater(s, p))

print("\n== geometric series land on 1/(1-e) ==")
for e in (F(1, 2), F(3, 4), F(9, 10)):
    q = geometric_series_sums(e)
    print(f"  e = {e}: sums -> {q.render():34} limit {1/(1-e)}")
