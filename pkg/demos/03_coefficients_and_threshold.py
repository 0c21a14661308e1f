"""Exact leading coefficients of the recursive constructions.

c_r is the constant with (number of blocks) ~ c_r * C(n, floor(r/2)). Even
coefficients solve a linear fixed point exactly; odd ones average the cost
of the paired profiles. Everything here is a Fraction, so the comparison
"c_r < 1" is decided without rounding.
"""
from __future__ import annotations

from fractions import Fraction

from gpcover import bounds

table = bounds.coefficient_table(20)
print(" r  c_r            decimal   (14/15)^(floor(r/2)/3)")
for r in range(2, 21):
    c = table[r].value
    print(f"{r:2d}  {str(c):13s}  {float(c):.6f}  {float(bounds.closed_form_coefficient(r).value()):.6f}")

r_star, rows = bounds.smallest_odd_below_one(301)
c = dict(rows)[r_star]
print(f"\nfirst odd r with c_r < 1: {r_star}  (c_r = {bounds.decimal_str(c)})")
choices = bounds.coefficient_table(r_star)[r_star].pair_choices
print("pairs that switch to products:", [p.t for p in choices if p.option == "product"])

x = bounds.middle_pair_closed_form(125)
print(f"\nmiddle pair at r=125 with the closed-form even coefficients: {x} = {bounds.decimal_str(x.value())}")
print("decided <= 0.981 exactly:", x <= Fraction(981, 1000))

print("\nearlier coefficient bound is below one at r=295:", bounds.prior_coefficient(295) < 1)
print("largest even r where it is still >= 1:", bounds.crossover_even(2000))
