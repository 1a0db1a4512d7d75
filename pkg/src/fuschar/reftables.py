"""Reproduction suites for the bundled reference data: symbolic character
tables of the overgroups, orbit analyses, point counts, and the known
non-saturated counterexample.  Each suite returns a structured match report;
discrepancies are first-class output, not exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartable import regular_character
from .constructions import (
    ConstructionParams,
    count_n_v_psi,
    gamma_orbit_analysis,
    table3_expected,
)
from .cyclotomic import Cyclotomic
from .exotic import (
    OvergroupContext,
    cubic_root_check,
    overgroup_context,
    pick_rows,
    pick_unique,
    table_3492,
)
from .fusion import apply_merges, fusion_of_self
from .groups import cyclic_group
from .intlinalg import lattice_index
from .stable import indecomposables_bounded, stable_character_basis
from .verify import verify_conjecture, verify_table_fusion


@dataclass
class MatchReport:
    label: str
    matches: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def check(self, name: str, good: bool, detail: str = "") -> None:
        (self.matches if good else self.discrepancies).append(
            {"item": name, "detail": detail} if detail else {"item": name})

    def to_json(self) -> dict:
        return {"label": self.label, "ok": self.ok, "matches": self.matches,
                "discrepancies": self.discrepancies, "notes": self.notes}


# -- Table 1: restrictions from S:<b> -------------------------------------------


def table1_families(p: int) -> list[dict]:
    """(degree, value at u, value at z, #characters, #restrictions) per family."""
    fams = [
        {"name": "linear", "degree": 1, "u": 1, "z": 1,
         "chars": p - 1, "restrictions": 1},
        {"name": "chi_ij", "degree": p - 1, "u": -1, "z": p - 1,
         "chars": p, "restrictions": p},
        {"name": "chi_ijk", "degree": p * (p - 1), "u": 0, "z": -p,
         "chars": p, "restrictions": p},
        {"name": "chi_0s0", "degree": p * (p - 1) // 2, "u": 0,
         "z": p * (p - 1) // 2, "chars": 4, "restrictions": 2},
    ]
    if p % 3 == 1:
        fams.append({"name": "chi_0s_t", "degree": (p - 1) // 3, "u": (p - 1) // 3,
                     "z": (p - 1) // 3, "chars": 9, "restrictions": 3})
    else:
        fams.append({"name": "chi_01", "degree": p - 1, "u": p - 1, "z": p - 1,
                     "chars": 1, "restrictions": 1})
    return fams


def reproduce_table1(p: int) -> MatchReport:
    report = MatchReport(f"table1@p={p}")
    if p < 5:
        report.notes["admissible"] = "stated for p >= 5"
    ctx = overgroup_context(p, "N_b")
    uc = ctx.class_of(ctx.S.designated["u"])
    zc = ctx.class_of(ctx.z_element())
    fams = table1_families(p)
    claimed = set()
    for fam in fams:
        rows = pick_rows(ctx, degree=fam["degree"], at={uc: fam["u"], zc: fam["z"]})
        n_chars = sum(r.n_preimages for r in rows)
        report.check(f"{fam['name']}:restrictions", len(rows) == fam["restrictions"],
                     f"found {len(rows)}, expected {fam['restrictions']}")
        report.check(f"{fam['name']}:characters", n_chars == fam["chars"],
                     f"found {n_chars}, expected {fam['chars']}")
        claimed.update(id(r) for r in rows)
    report.check("families_exhaustive",
                 claimed == {id(r) for r in ctx.rows},
                 "every computed restriction must land in exactly one family")
    report.notes["k_base"] = ctx.base.k
    return report


# -- Table 2 / Table 4: restrictions from V:Gamma and the merged basis -----------


def table2_rows(p: int, eps: int) -> list[dict]:
    """Expected values at (1, v1, v2, v1+eps*v3, u, u') as integers."""
    half = (p - 1) // 2
    return [
        {"name": "1_S", "vals": (1, 1, 1, 1, 1, 1), "basis": True},
        {"name": "theta_{p-1}", "vals": (p - 1, p - 1, p - 1, p - 1, -1, -1),
         "basis": True},
        {"name": "chi(psi100)", "vals": (p * p - 1, -1, p - 1, -(p + 1), p - 1, -1),
         "basis": True},
        {"name": "chi(psi100,rho)", "basis": True,
         "vals": ((p * p - 1) * (p - 1), -(p - 1), (p - 1) ** 2, -(p * p - 1),
                  -(p - 1), 1)},
        {"name": "chi(psi10e)", "basis": True,
         "vals": (p * (p - 1) ** 2 // 2, -p * half, 0, p, 0, 0)},
        {"name": "chi(psi010)", "basis": True,
         "vals": (p * (p * p - 1) // 2, p * half, -p, 0, 0, 0)},
        {"name": "theta_p", "vals": (p, p, p, p, 0, 0), "basis": False},
        {"name": "theta_{p+1}", "vals": (p + 1, p + 1, p + 1, p + 1, 1, 1),
         "basis": False},
        {"name": "chi(psi10e,rho2)", "basis": False,
         "vals": (p * (p - 1) ** 2, -p * (p - 1), 0, 2 * p, 0, 0)},
        {"name": "chi(psi010,rho2)", "basis": False,
         "vals": (p * (p * p - 1), p * (p - 1), -2 * p, 0, 0, 0)},
    ]


def _gamma_column_classes(ctx: OvergroupContext) -> list[int]:
    """Fusion classes of (1, v1, v2, v1+eps*v3, u, other u-type)."""
    s = ctx.S
    cols = [ctx.class_of(s.identity), ctx.class_of(s.designated["v1"]),
            ctx.class_of(s.designated["v2"]),
            ctx.class_of(s.designated["v1+e*v3"]),
            ctx.class_of(s.designated["u"])]
    other_u = [i for i in ctx.u_class_indices if i != cols[4]]
    if len(other_u) != 1:
        raise LookupError("expected exactly two off-V fusion classes")
    return cols + other_u


def reproduce_table2(p: int) -> MatchReport:
    report = MatchReport(f"table2@p={p}")
    ctx = overgroup_context(p, "N_gamma")
    params = ConstructionParams.for_prime(p)
    cols = _gamma_column_classes(ctx)
    expected = table2_rows(p, params.epsilon)
    by_vals = {tuple(r["vals"]): r for r in expected}
    realized = set()
    for row in ctx.rows:
        vals = tuple(v.rational_value() if v.is_rational_integer() else None
                     for v in (row.values[c] for c in cols))
        match = by_vals.get(vals)
        if match is None:
            report.check("computed_row_in_table", False,
                         f"unlisted restriction with values {vals}")
        else:
            realized.add(match["name"])
    for r in expected:
        if r["basis"]:
            report.check(f"{r['name']}_realized", r["name"] in realized)
    report.check("k_base_is_6", ctx.base.k == 6, f"k = {ctx.base.k}")
    # the six basis rows must span the stable lattice of the base fusion
    basis_rows = [_table2_pick(ctx, cols, r) for r in expected if r["basis"]]
    lattice = stable_character_basis(ctx.irr_s, ctx.base)
    idx = lattice_index(lattice.basis, [list(r.coords) for r in basis_rows])
    report.check("basis_spans_stable_lattice", idx == 1, f"index {idx}")
    report.notes["columns"] = ["1", "v1", "v2", "v1+e*v3", "u", "u'"]
    report.notes.update(_off_v_class_notes(ctx))
    return report


def _off_v_class_notes(ctx: OvergroupContext) -> dict:
    """Computed off-V class structure, flagging which published representative
    set matches (the statement's u*v1 and the proof's u*v2 are both conjugate
    to u itself under the constructed action; the genuine second class is
    represented by a v3-coset element)."""
    s = ctx.S
    u = s.designated["u"]
    u_class = ctx.class_of(u)
    notes = {"off_V_class_count": len(ctx.u_class_indices)}
    for label in ("v1", "v2", "v3"):
        elem = u * s.designated[label]
        notes[f"u*{label}_fused_with_u"] = ctx.class_of(elem) == u_class
    others = [i for i in ctx.u_class_indices if i != u_class]
    notes["second_off_V_reps"] = [repr(ctx.base.classes[i].rep) for i in others]
    return notes


def _table2_pick(ctx, cols, row_spec):
    return pick_unique(ctx, degree=row_spec["vals"][0],
                       at={c: v for c, v in zip(cols, row_spec["vals"])})


def table4_rows(p: int) -> list[dict]:
    """The merged-system basis: multiplicities over the table2 basis rows and
    the claimed (degree, common value at v1 and u)."""
    half = (p - 1) // 2
    return [
        {"combo": {"1_S": 1}, "degree": 1, "val": 1},
        {"combo": {"chi(psi100,rho)": 1}, "degree": (p * p - 1) * (p - 1),
         "val": -(p - 1)},
        {"combo": {"chi(psi010)": 1, "chi(psi10e)": 1}, "degree": p * p * (p - 1),
         "val": 0},
        {"combo": {"theta_{p-1}": 1, "chi(psi100)": 1},
         "degree": (p - 1) * (p + 2), "val": p - 2},
        {"combo": {"chi(psi100)": half, "chi(psi010)": 1},
         "degree": (p * p - 1) * (2 * p - 1) // 2, "val": half * (p - 1)},
    ]


def reproduce_table4(p: int) -> MatchReport:
    report = MatchReport(f"table4@p={p}")
    ctx = overgroup_context(p, "N_gamma")
    params = ConstructionParams.for_prime(p)
    cols = _gamma_column_classes(ctx)
    basis = {r["name"]: _table2_pick(ctx, cols, r)
             for r in table2_rows(p, params.epsilon) if r["basis"]}
    merged = apply_merges(ctx.base, [(ctx.z_element(), ctx.S.designated["u"])])
    rows = []
    for spec in table4_rows(p):
        coords = [0] * len(next(iter(basis.values())).coords)
        for name, mult in spec["combo"].items():
            for j, c in enumerate(basis[name].coords):
                coords[j] += mult * c
        cf = ctx.irr_s.combination(coords)
        sc_v1 = _s_class(ctx, ctx.S.designated["v1"])
        sc_u = _s_class(ctx, ctx.S.designated["u"])
        report.check(f"row{len(rows)}_degree", cf.degree_int() == spec["degree"],
                     f"{cf.degree_int()} vs {spec['degree']}")
        good_vals = (cf.values[sc_v1] == spec["val"] and cf.values[sc_u] == spec["val"])
        report.check(f"row{len(rows)}_values", good_vals)
        rows.append(coords)
    lattice = stable_character_basis(ctx.irr_s, merged)
    idx = lattice_index(lattice.basis, rows)
    report.check("span_equals_merged_lattice", idx == 1, f"index {idx}")
    return report


def _s_class(ctx, element) -> int:
    from .groups import conjugacy_classes

    sc = conjugacy_classes(ctx.S)
    return sc.class_index_of(ctx.S, element)


def regular_decomposition_check(p: int) -> MatchReport:
    """reg_S = 1 + theta + chi(psi100) + chi(psi100,rho) + p*chi(psi10e)
    + p*chi(psi010), checked exactly."""
    report = MatchReport(f"regular-decomposition@p={p}")
    ctx = overgroup_context(p, "N_gamma")
    params = ConstructionParams.for_prime(p)
    cols = _gamma_column_classes(ctx)
    basis = {r["name"]: _table2_pick(ctx, cols, r)
             for r in table2_rows(p, params.epsilon) if r["basis"]}
    mults = {"1_S": 1, "theta_{p-1}": 1, "chi(psi100)": 1, "chi(psi100,rho)": 1,
             "chi(psi10e)": p, "chi(psi010)": p}
    coords = [0] * len(basis["1_S"].coords)
    for name, mult in mults.items():
        for j, c in enumerate(basis[name].coords):
            coords[j] += mult * c
    cf = ctx.irr_s.combination(coords)
    reg = regular_character(ctx.irr_s.classes, ctx.S.order)
    report.check("regular_character_identity", cf.values == reg.values)
    return report


# -- Table 5: the twisted overgroup at p = 5 -------------------------------------


def table5_expected() -> tuple[list[str], list[str], dict]:
    """Row names, column names, and exact entries for the p = 5 twisted table."""
    z5 = Cyclotomic.root_of_unity(5)
    zeta = z5 + z5.galois(4)          # (-1 + sqrt 5) / 2
    zbar = z5.galois(2) + z5.galois(3)  # (-1 - sqrt 5) / 2
    i = Cyclotomic.integer
    rows = ["1_S", "theta_4", "chi_0", "chi_1", "chi_2", "chi_3", "chi_4",
            "sigma_1'", "sigma_2'", "sigma_1", "sigma_2"]
    cols = ["1", "v1", "v2", "lam*v2", "q", "lam*q", "u0", "u1", "u2", "u3", "u4"]
    ent = {}

    def fill(name, vals):
        for c, v in zip(cols, vals):
            ent[(name, c)] = v if isinstance(v, Cyclotomic) else i(v)

    fill("1_S", [1] * 11)
    fill("theta_4", [4, 4, 4, 4, 4, 4, -1, -1, -1, -1, -1])
    for j in range(5):
        u_vals = [-1] * 5
        u_vals[j] = 4
        fill(f"chi_{j}", [24, -1, 4, 4, -6, -6] + u_vals)
    fill("sigma_1'", [20, -5, 0, 0, zeta * -5, zbar * -5, 0, 0, 0, 0, 0])
    fill("sigma_2'", [20, -5, 0, 0, zbar * -5, zeta * -5, 0, 0, 0, 0, 0])
    fill("sigma_1", [30, 5, zeta * 5, zbar * 5, 0, 0, 0, 0, 0, 0, 0])
    fill("sigma_2", [30, 5, zbar * 5, zeta * 5, 0, 0, 0, 0, 0, 0, 0])
    return rows, cols, ent


def reproduce_table5() -> MatchReport:
    report = MatchReport("table5@p=5")
    ctx = overgroup_context(5, "N_gamma4star")
    s = ctx.S
    rows, cols, expected = table5_expected()
    col_classes = {
        "1": ctx.class_of(s.identity),
        "v1": ctx.class_of(s.designated["v1"]),
        "v2": ctx.class_of(s.designated["v2"]),
        "lam*v2": ctx.class_of(s.designated["lam*v2"]),
        "q": ctx.class_of(s.designated["v1+e*v3"]),
        "lam*q": ctx.class_of(s.designated["lam*(v1+e*v3)"]),
        "u0": ctx.class_of(s.designated["u"]),
    }
    floating = [i for i in ctx.u_class_indices if i != col_classes["u0"]]
    report.check("eleven_base_classes", ctx.base.k == 11, f"k = {ctx.base.k}")
    report.check("eleven_distinct_restrictions", len(ctx.rows) >= 11,
                 f"{len(ctx.rows)} distinct restrictions")
    # anchored rows
    named: dict[str, object] = {}
    try:
        named["1_S"] = pick_unique(ctx, degree=1)
        named["theta_4"] = pick_unique(ctx, degree=4)
        named["chi_0"] = pick_unique(ctx, degree=24, at={col_classes["u0"]: 4})
        chi_float = [r for r in pick_rows(ctx, degree=24) if r is not named["chi_0"]]
        # align the remaining chi rows to the floating u-columns via their 4
        for j, ci in enumerate(floating, start=1):
            named[f"chi_{j}"] = next(r for r in chi_float
                                     if r.values[ci].is_rational_integer()
                                     and r.values[ci].rational_value() == 4)
            col_classes[f"u{j}"] = ci
        zeta_val = expected[("sigma_1", "v2")]
        for deg, base_name in ((20, "sigma_1'"), (30, "sigma_1")):
            pair = pick_rows(ctx, degree=deg)
            anchor_col = col_classes["q" if deg == 20 else "v2"]
            target = expected[(base_name, "q" if deg == 20 else "v2")]
            first = next(r for r in pair if r.values[anchor_col] == target)
            second = next(r for r in pair if r is not first)
            named[base_name] = first
            named[base_name.replace("1", "2")] = second
    except (LookupError, StopIteration) as exc:
        report.check("row_identification", False, str(exc))
        return report
    for rname in rows:
        row = named[rname]
        for cname in cols:
            got = row.values[col_classes[cname]]
            want = expected[(rname, cname)]
            report.check(f"{rname}@{cname}", got == want,
                         f"computed {got!r}, expected {want!r}")
    return report


# -- dispatch -------------------------------------------------------------------


def reproduce_orbit_lemma(item: str, p: int) -> MatchReport:
    """Orbit sizes, stabilizer orders and abelianness for the three analyses."""
    report = MatchReport(f"{item}@p={p}")
    half = (p - 1) // 2
    if item == "lemma42":
        variant = "gamma"
        expected = sorted([
            (p * p - 1, p * (p - 1), False),
            (p * (p * p - 1) // 2, 2 * (p - 1), p == 3),
            (p * (p - 1) ** 2 // 2, 2 * (p + 1), False),
        ])
    elif item == "lemma56":
        if p % 4 != 3:
            raise ValueError("this analysis needs p = 3 (mod 4)")
        variant = "gamma2"
        expected = sorted([
            (p * p - 1, p * half, half == 1),
            (p * (p * p - 1) // 2, p - 1, True),
            (p * (p - 1) ** 2 // 2, p + 1, True),
        ])
    elif item == "lemma58":
        if p % 4 != 1:
            raise ValueError("this analysis needs p = 1 (mod 4)")
        variant = "gamma4star"
        q = (p - 1) // 4
        expected = sorted([
            (p * p - 1, p * q, q == 1),
            (p * (p * p - 1) // 4, p - 1, p - 1 <= 4),
            (p * (p * p - 1) // 4, p - 1, p - 1 <= 4),
            (p * (p - 1) ** 2 // 4, p + 1, p + 1 <= 4),
            (p * (p - 1) ** 2 // 4, p + 1, p + 1 <= 4),
        ])
    else:
        raise ValueError(f"unknown orbit item {item!r}")
    orbits = gamma_orbit_analysis(p, variant)
    got = sorted((o.size, o.stabilizer_order, o.stabilizer_abelian) for o in orbits)
    report.check("orbit_count", len(got) == len(expected),
                 f"{len(got)} vs {len(expected)}")
    report.check("orbit_data", got == expected, f"computed {got}, expected {expected}")
    return report


def reproduce_table3(p: int) -> MatchReport:
    report = MatchReport(f"table3@p={p}")
    for key, want in table3_expected(p).items():
        got = count_n_v_psi(p, *key)
        report.check(f"n[{key[0]},{key[1]}]", got == want, f"{got} vs {want}")
    return report


def reproduce_table6() -> MatchReport:
    report = MatchReport("table6")
    for name, good in cubic_root_check().items():
        report.check(name, good)
    tf = table_3492()
    # column orthogonality of the realising group, via the Clifford
    # multiplicities of the index-2 extension
    from .exotic import TABLE_3492_IRR_MULTIPLICITIES as mult

    for j in range(10):
        acc = Cyclotomic.zero()
        for m, row in zip(mult, tf.basis_values):
            v = row[j]
            acc = acc + v * v.conjugate() * m
        cn = 2 * tf.group_order // tf.class_sizes[j]
        report.check(f"column_norm_g{j+1}", acc == cn,
                     f"sum {acc!r}, |C_N| {cn}")
    rep = verify_table_fusion(tf)
    report.check("identity_verified", rep.verdict == "verified",
                 f"verdict {rep.verdict}")
    report.notes["lhs_det"] = str(rep.lhs_det)
    report.notes["rhs"] = str(rep.rhs_product)
    return report


def reproduce_example27() -> tuple[MatchReport, object]:
    """The non-saturated merge on the cyclic group of order 8."""
    from .chartable import dixon_character_table

    report = MatchReport("example27")
    c8 = cyclic_group(8)
    a = c8.designated["a"]
    table = dixon_character_table(c8)
    base = fusion_of_self(c8, 2)
    merged = apply_merges(base, [(a * a, a * a * a * a * a * a)])
    report.check("k_is_7", merged.k == 7)
    lattice = stable_character_basis(table, merged)
    ind, complete = indecomposables_bounded(lattice, 2)
    report.check("eight_indecomposables", len(ind) == 8 and complete,
                 f"{len(ind)} found, complete={complete}")
    singles = [v for v in ind if sum(v) == 1]
    pairs = [v for v in ind if sum(v) == 2 and max(v) == 1]
    report.check("four_singles_four_pairs", len(singles) == 4 and len(pairs) == 4)
    verdict = verify_conjecture(merged, table, "example27")
    report.check("lhs_2^22", verdict.lhs_det == 2 ** 22, f"det {verdict.lhs_det}")
    report.check("rhs_2^21", verdict.rhs_product == 2 ** 21)
    report.check("verdict_counterexample", verdict.verdict == "counterexample")
    report.notes["saturation_certified"] = verdict.saturation_certified
    return report, verdict


def reproduce(item: str, p: int | None = None) -> MatchReport:
    """Dispatch a named reproduction suite."""
    if item == "table1":
        return reproduce_table1(p or 5)
    if item == "table2":
        return reproduce_table2(p or 3)
    if item == "table3":
        return reproduce_table3(p or 5)
    if item == "table4":
        return reproduce_table4(p or 3)
    if item == "table5":
        return reproduce_table5()
    if item == "table6":
        return reproduce_table6()
    if item in ("lemma42", "lemma56", "lemma58"):
        default = {"lemma42": 5, "lemma56": 3, "lemma58": 5}[item]
        return reproduce_orbit_lemma(item, p or default)
    if item == "example27":
        return reproduce_example27()[0]
    raise ValueError(f"unknown reproduction item {item!r}")
