"""Orbit structure of the quadratic-form action and the brute-force point
counts over PGL_2(p) that feed the induced-character value formula."""

from fuschar.constructions import (
    count_n_v_psi,
    gamma_orbit_analysis,
    induced_value_formula,
    table3_expected,
)

for p in (3, 5):
    print(f"== p = {p}: orbits of the full form-action group on V \\ 0")
    for orbit in gamma_orbit_analysis(p, "gamma"):
        kind = "abelian" if orbit.stabilizer_abelian else "nonabelian"
        print(f"  rep {orbit.rep}: orbit size {orbit.size}, "
              f"stabilizer order {orbit.stabilizer_order} ({kind})")

print("\n== zero counts of the nine pairing forms over PGL_2(p)")
for p in (3, 5, 7):
    expected = table3_expected(p)
    line = ", ".join(str(count_n_v_psi(p, v, psi)) for (v, psi) in expected)
    assert all(count_n_v_psi(p, v, psi) == n for (v, psi), n in expected.items())
    print(f"  p = {p}: {line}")

print("\n== induced-character values at V-elements from the counting formula")
p = 5
stabs = {"psi100": p * (p - 1), "psi010": 2 * (p - 1), "psi10e": 2 * (p + 1)}
for v in ("v1", "v2", "v1+e*v3"):
    vals = [induced_value_formula(p, psi, 1, stab, v) for psi, stab in stabs.items()]
    print(f"  value at {v}: {vals}")
