"""The determinant identity needs saturation: a walk through the order-8
cyclic counterexample.

We fuse a^2 with a^6 inside C8 = <a> without the automorphism extending to
the whole group.  The stable lattice still has full rank, but the p-part of
|X conj(X)^T| overshoots the centralizer product by one factor of 2.
"""

from fuschar.chartable import dixon_character_table
from fuschar.fusion import apply_merges, fusion_of_self
from fuschar.groups import cyclic_group
from fuschar.stable import indecomposables_bounded, stable_character_basis
from fuschar.verify import verify_conjecture

c8 = cyclic_group(8)
a = c8.designated["a"]
table = dixon_character_table(c8)
print(f"|S| = {c8.order}, irreducible degrees: {table.degrees()}")

base = fusion_of_self(c8, 2)
merged = apply_merges(base, [(a ** 2, a ** 6)])
print(f"classes before merge: {base.k}, after fusing a^2 ~ a^6: {merged.k}")

lattice = stable_character_basis(table, merged)
print(f"stable lattice rank: {lattice.rank}")

ind, complete = indecomposables_bounded(lattice, 2)
print(f"indecomposable stable characters of degree <= 2: {len(ind)} "
      f"(complete: {complete})")
for vec in ind:
    print("  ", vec)

report = verify_conjecture(merged, table, "C8 with a^2 ~ a^6")
print(f"|X conj(X)^T|        = {report.lhs_det} = 2^22")
print(f"prod |C_S(s)|        = {report.rhs_product} = 2^21")
print(f"verdict              = {report.verdict}")
print(f"saturation certified = {report.saturation_certified}")
print("The 2-part mismatch shows the saturation hypothesis cannot be dropped.")
