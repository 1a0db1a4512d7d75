"""Whole-group verification on S4 at p = 2, showing the exact bookkeeping:
the decomposition matrix D of restricted irreducibles over the stable basis,
its Gram determinant |C| coprime to p, and the identity
|X conj(X)^T| * |C| = prod |C_G(s)|.
"""

from fuschar.chartable import dixon_character_table
from fuschar.fusion import fusion_from_group
from fuschar.groups import standard_group, sylow_subgroup
from fuschar.stable import decomposition_matrix, stable_character_basis
from fuschar.verify import verify_group_case

g = standard_group("S4")
p = 2
s = sylow_subgroup(g, p)
print(f"|G| = {g.order}, Sylow {p}-subgroup of order {s.order} (dihedral)")

fusion = fusion_from_group(g, s, p)
print(f"fusion classes of S under G-conjugacy: {fusion.k}")
for fc in fusion.classes:
    print(f"  rep order {fc.rep_order}, class size {fc.size}, "
          f"|C_S| = {fc.centralizer_order}")

table_s = dixon_character_table(s)
lattice = stable_character_basis(table_s, fusion)
dec = decomposition_matrix(dixon_character_table(g), s, lattice)
print("decomposition matrix D (rows = irreducibles of G over the stable basis):")
for row in dec.d_matrix:
    print("  ", row)
print(f"|C| = det(D^T D) = {dec.det_c}  (odd, as the theory demands)")

report = verify_group_case(g, p, "S4")
print(f"lhs determinant = {report.lhs_det}")
print(f"p-part          = {report.lhs_p_part}")
print(f"rhs product     = {report.rhs_product}")
print(f"checks          = {report.checks}")
print(f"verdict         = {report.verdict}")
