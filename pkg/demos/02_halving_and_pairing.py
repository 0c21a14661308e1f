"""Recursive constructions and where their savings come from.

Even uniformity: split the vertices in half and cover each profile (i, m - i)
by a product of covers of the two halves. Odd uniformity: pair adjacent
profiles and cover each pair either with interval blocks (one shared tail
part) or with two products.

With baseline covers at the leaves the halving recursion reproduces the
baseline count exactly. The savings in the coefficients c_r enter through
the quoted value c_4 = 14/15, which is fed into the recurrence as a number;
this package has no explicit cover attaining it. The demo shows both facts.
"""
from __future__ import annotations

from gpcover import ConstructionStrategy, baseline_count, construct, verify_exact_cover
from gpcover.bounds import coefficient_table, finite_bound
from gpcover.constructions import ALL_LEMMA1, lemma1_count

print("even r: explicit halving covers vs baseline")
for n, m in ((16, 4), (16, 6), (64, 4), (64, 6)):
    c = construct(n, m, ConstructionStrategy("halving", base_threshold=m))
    exact = verify_exact_cover(c).is_exact if n <= 16 else "(not re-verified)"
    print(f"  n={n:2d} m={m}: baseline {baseline_count(n, m):6d}  halving {len(c):6d}  exact {exact}")

print("\nwhat the recursion gives once the r=4 leaves cost (14/15) n^2/2 + n ln n:")
for n in (256, 1024, 4096):
    print(f"  n={n:4d}: m=6 baseline {baseline_count(n, 6):>12d}  recursive bound {finite_bound(6, n):>12d}")

print("\nodd r = 5 on 12 vertices")
default = construct(12, 5, ConstructionStrategy("odd-pairing"))
intervals = construct(12, 5, ALL_LEMMA1)
print(f"  interval blocks everywhere : {len(intervals)} blocks (baseline: {baseline_count(12, 5)})")
print(f"  products on the middle pair: {len(default)} blocks")
print("  interval blocks per pair (6 vertices per side):", [lemma1_count(6, 6, 2 * t, 4 - 2 * t) for t in range(3)])

table = coefficient_table(113)
print(f"\nasymptotically the product option wins on some pairs only for large r: c_113 = {float(table[113].value):.6f}")
