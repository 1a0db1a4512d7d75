"""The exotic merged systems on the order-81 group S = V:U at p = 3:
verify the identity directly and transport it with an induction certificate.
"""

from fuschar.exotic import build_exotic_fusion, certificate_f1, overgroup_context
from fuschar.verify import check_induction_certificate, verify_conjecture

for name in ("G_prune", "F1", "Op_F1"):
    merged, ctx = build_exotic_fusion(name, 3)
    report = verify_conjecture(merged, ctx.irr_s, name)
    print(f"{name}: k(F) = {report.k}, "
          f"lhs p-part = {report.lhs_p_part}, rhs = {report.rhs_product}, "
          f"verdict = {report.verdict}")

print("\ninduction certificate for the V:Gamma merge (eta = the degree p-1 row):")
ctx = overgroup_context(3, "N_gamma")
cert = certificate_f1(3)
rep = check_induction_certificate(cert, ctx.irr_s)
for name, ok in rep.hypotheses.items():
    print(f"  {name}: {'ok' if ok else 'FAILED'}")
print(f"det relation: {rep.det_base} = 3^2 * {rep.det_target}: "
      f"{rep.det_base == 9 * rep.det_target}")
