"""Fusion systems on the p^4 family beyond group fusion: merge descriptions,
bundled reference character tables, induction certificates, and the
order-162 table-mode instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chartable import CharacterTable, dixon_character_table, restrict_table
from .constructions import build_group, is_translation, sylow_inside
from .cyclotomic import Cyclotomic
from .fusion import FusionData, TableFusion, apply_merges, fusion_from_group
from .groups import FiniteGroup, conjugacy_classes
from .stable import irr_coordinates
from .verify import InductionCertificate


@dataclass
class RestrictionRow:
    """One distinct restriction of an overgroup irreducible to S."""

    coords: tuple[int, ...]
    degree: int
    values: tuple[Cyclotomic, ...]  # indexed by base fusion class
    n_preimages: int


@dataclass
class OvergroupContext:
    p: int
    which: str
    N: FiniteGroup
    S: FiniteGroup
    irr_s: CharacterTable
    irr_n: CharacterTable
    base: FusionData  # fusion of S induced by N
    rows: list[RestrictionRow]
    u_class_indices: list[int]  # base classes off V, designated u's class first

    def z_element(self):
        return self.S.designated["z"]

    def value_at_class(self, row: RestrictionRow, class_idx: int) -> Cyclotomic:
        return row.values[class_idx]

    def class_of(self, element) -> int:
        return self.base.class_of_element(element)


@lru_cache(maxsize=None)
def overgroup_context(p: int, which: str) -> OvergroupContext:
    n = build_group(p, which)
    s = sylow_inside(p, which)
    base = fusion_from_group(n, s, p)
    irr_s = dixon_character_table(s)
    irr_n = dixon_character_table(n)
    restricted, _ = restrict_table(irr_n, s)
    sc = conjugacy_classes(s)
    anchor_cols = [sc.class_index_of(s, fc.rep) for fc in base.classes]
    groups: dict[tuple, list] = {}
    for chi in restricted:
        key = tuple(chi.values[j].key() for j in anchor_cols)
        groups.setdefault(key, []).append(chi)
    rows = []
    for chis in groups.values():
        chi = chis[0]
        rows.append(RestrictionRow(
            coords=tuple(irr_coordinates(chi, irr_s)),
            degree=chi.degree_int(),
            values=tuple(chi.values[j] for j in anchor_cols),
            n_preimages=len(chis),
        ))
    rows.sort(key=lambda r: (r.degree, tuple(v.embedded(irr_s.conductor).coeffs
                                             for v in r.values)))
    u_cls = [i for i, fc in enumerate(base.classes) if not is_translation(fc.rep)]
    u_main = base.class_of_element(s.designated["u"])
    u_cls.sort(key=lambda i: (i != u_main, i))
    return OvergroupContext(p, which, n, s, irr_s, irr_n, base, rows, u_cls)


def _row_value_int(row: RestrictionRow, idx: int) -> int | None:
    v = row.values[idx]
    return v.rational_value() if v.is_rational_integer() else None


def pick_rows(ctx: OvergroupContext, degree: int | None = None,
              at: dict[int, int] | None = None) -> list[RestrictionRow]:
    """Restriction rows matching a degree and rational values at base classes."""
    out = []
    for row in ctx.rows:
        if degree is not None and row.degree != degree:
            continue
        if at and any(_row_value_int(row, idx) != val for idx, val in at.items()):
            continue
        out.append(row)
    return out


def pick_unique(ctx: OvergroupContext, **kw) -> RestrictionRow:
    rows = pick_rows(ctx, **kw)
    if len(rows) != 1:
        raise LookupError(f"expected one matching restriction, found {len(rows)}")
    return rows[0]


# -- merge descriptions for the named systems ----------------------------------


def base_construction_for(name: str, p: int) -> str:
    if name == "G_prune":
        return "N_b"
    if name == "F1":
        return "N_gamma"
    if name == "Op_F1":
        if p % 4 == 3:
            return "N_gamma2"
        if p % 4 == 1:
            return "N_gamma4star"
        raise ValueError("p must be odd")
    raise ValueError(f"unknown system {name!r}")


def exotic_fusion_spec(name: str, p: int) -> dict:
    """Serializable description: base construction plus merge word list."""
    if name == "F_3492":
        if p != 3:
            raise ValueError("the order-162 table-mode instance is specific to p = 3")
        return {"name": name, "p": p, "mode": "table",
                "merges": [["g2", "g6"], ["g2", "g7"]]}
    if name.startswith("F547_chain"):
        if p != 5:
            raise ValueError("the chain certificates are specific to p = 5")
        family = name.split(":", 1)[1] if ":" in name else "psu"
        if family not in CHAIN_LABELS:
            raise ValueError(f"unknown chain family {family!r}")
        return {"name": name, "p": p, "mode": "chain", "family": family,
                "base": "N_gamma4star" if family == "psu" else "N_b"}
    base = base_construction_for(name, p)
    return {"name": name, "p": p, "mode": "group", "base": base,
            "merges": [["z", "u"]]}


def build_exotic_fusion(name: str, p: int) -> tuple[FusionData, OvergroupContext]:
    """The merged fusion partition of one named system, plus its context."""
    base = base_construction_for(name, p)
    ctx = overgroup_context(p, base)
    merged = apply_merges(ctx.base, [(ctx.z_element(), ctx.S.designated["u"])])
    return merged, ctx


# -- induction certificates -----------------------------------------------------


def _combo(rows: list[RestrictionRow], terms: list[tuple[int, RestrictionRow]]) -> list[int]:
    k = len(rows[0].coords)
    out = [0] * k
    for mult, row in terms:
        for j, c in enumerate(row.coords):
            out[j] += mult * c
    return out


def certificate_f1(p: int) -> InductionCertificate:
    """Certificate for the merge on V:Gamma, with the printed basis rows."""
    ctx = overgroup_context(p, "N_gamma")
    z = ctx.z_element()
    u = ctx.S.designated["u"]
    zc, uc = ctx.class_of(z), ctx.class_of(u)
    v1c = ctx.class_of(ctx.S.designated["v1"])
    one = pick_unique(ctx, degree=1)
    theta = pick_unique(ctx, degree=p - 1, at={uc: -1})
    chi_x2 = pick_unique(ctx, degree=p * p - 1, at={v1c: -1, uc: p - 1})
    chi_x2_rho = pick_unique(ctx, degree=(p * p - 1) * (p - 1),
                             at={v1c: -(p - 1), uc: -(p - 1)})
    chi_quad = pick_unique(ctx, degree=p * (p - 1) ** 2 // 2,
                           at={v1c: -p * (p - 1) // 2})
    chi_sep = pick_unique(ctx, degree=p * (p * p - 1) // 2,
                          at={v1c: p * (p - 1) // 2})
    b_n = [one, theta, chi_x2, chi_x2_rho, chi_quad, chi_sep]
    b_f = [
        _combo(b_n, [(1, one)]),
        _combo(b_n, [(1, chi_x2_rho)]),
        _combo(b_n, [(1, chi_sep), (1, chi_quad)]),
        _combo(b_n, [(1, theta), (1, chi_x2)]),
        _combo(b_n, [((p - 1) // 2, chi_x2), (1, chi_sep)]),
    ]
    target = apply_merges(ctx.base, [(z, u)])
    return InductionCertificate(
        label=f"F1@p={p}", base=ctx.base, target=target,
        b_n=[list(r.coords) for r in b_n], b_f=b_f, eta=1, z=z, u=u)


def corrupted_certificate_f1(p: int) -> InductionCertificate:
    """Negative control: eta swapped for the trivial character, whose value
    difference on the fused pair is 0."""
    cert = certificate_f1(p)
    cert.eta = 0
    return InductionCertificate(cert.label + ":corrupted", cert.base, cert.target,
                                cert.b_n, cert.b_f, 0, cert.z, cert.u)


def _auto_b_f(ctx_irr_s, b_n_rows: list[list[int]], eta_idx: int,
              u_anchor: int, z_anchor: int) -> list[list[int]]:
    """Candidate target basis chi + m*eta, with m clearing the (u, z) gap."""
    cfs = [ctx_irr_s.combination(row) for row in b_n_rows]
    eta_cf = cfs[eta_idx]
    eta_diff = (eta_cf.values[u_anchor] - eta_cf.values[z_anchor]).rational_value()
    out = []
    for i, row in enumerate(b_n_rows):
        if i == eta_idx:
            continue
        diff = (cfs[i].values[u_anchor] - cfs[i].values[z_anchor]).rational_value()
        m, r = divmod(-diff, eta_diff)
        if r:
            raise ArithmeticError("basis value difference not divisible by +-p")
        out.append([a + m * b for a, b in zip(row, b_n_rows[eta_idx])])
    return out


def _anchors(S: FiniteGroup, fusion_rep_elements: tuple) -> tuple[int, int]:
    sc = conjugacy_classes(S)
    return tuple(sc.class_index_of(S, x) for x in fusion_rep_elements)


def auto_step_certificate(ctx: OvergroupContext, base_fusion: FusionData,
                          b_n_rows: list[list[int]], z, u_new,
                          label: str, eta_idx: int | None = None
                          ) -> tuple[InductionCertificate, list[list[int]]]:
    """Build the next chain step: merge u_new into z's class and derive the
    candidate basis from eta."""
    p = ctx.p
    target = apply_merges(base_fusion, [(z, u_new)])
    sc = conjugacy_classes(ctx.S)
    u_anchor = sc.class_index_of(ctx.S, u_new)
    z_anchor = sc.class_index_of(ctx.S, z)
    if eta_idx is None:
        candidates = []
        for i, row in enumerate(b_n_rows):
            cf = ctx.irr_s.combination(row)
            d = cf.values[u_anchor] - cf.values[z_anchor]
            if d.is_rational_integer() and abs(d.rational_value()) == p:
                val = cf.values[u_anchor]
                rank = val.rational_value() if val.is_rational_integer() else -(10 ** 9)
                candidates.append((-rank, i))
        if not candidates:
            raise LookupError(f"{label}: no eta with value gap +-{p}")
        candidates.sort()
        eta_idx = candidates[0][1]
    b_f = _auto_b_f(ctx.irr_s, b_n_rows, eta_idx, u_anchor, z_anchor)
    cert = InductionCertificate(label, base_fusion, target, b_n_rows, b_f,
                                eta_idx, z, u_new)
    return cert, b_f


def certificate_g(p: int) -> InductionCertificate:
    """Certificate for the merge on S:<b>, with the printed combination basis."""
    ctx = overgroup_context(p, "N_b")
    z = ctx.z_element()
    u = ctx.S.designated["u"]
    zc, uc = ctx.class_of(z), ctx.class_of(u)
    lin = pick_unique(ctx, degree=1)
    chi_ij = pick_rows(ctx, degree=p - 1, at={uc: -1, zc: p - 1})
    chi_01 = pick_rows(ctx, degree=p - 1, at={uc: p - 1, zc: p - 1})
    chi_ijk = pick_rows(ctx, degree=p * (p - 1), at={zc: -p})
    chi_0s0 = pick_rows(ctx, degree=p * (p - 1) // 2, at={zc: p * (p - 1) // 2})
    expected = 1 + len(chi_ij) + len(chi_01) + len(chi_ijk) + len(chi_0s0)
    if expected != ctx.base.k:
        raise LookupError("restriction families do not exhaust the base classes")
    b_n = [lin] + chi_ij + chi_01 + chi_ijk + chi_0s0
    eta_row = chi_ijk[0]  # a degree p(p-1) induced character
    chi2 = chi_ij[0]
    b_f = [_combo(b_n, [(1, lin)])]
    b_f += [_combo(b_n, [(1, r), (1, eta_row)]) for r in chi_ij if r is not chi2]
    b_f += [_combo(b_n, [(1, r), (1, chi2)]) for r in chi_ijk if r is not eta_row]
    b_f.append(_combo(b_n, [(1, eta_row), (1, chi2)]))
    b_f += [_combo(b_n, [(1, r)]) for r in chi_01]
    b_f += [_combo(b_n, [(1, r), ((p - 1) // 2, eta_row)]) for r in chi_0s0]
    target = apply_merges(ctx.base, [(z, u)])
    return InductionCertificate(
        label=f"G_prune@p={p}", base=ctx.base, target=target,
        b_n=[list(r.coords) for r in b_n], b_f=b_f,
        eta=b_n.index(eta_row), z=z, u=u)


def certificate_op_f1(p: int) -> InductionCertificate:
    """Certificate for the merge on the index-e subgroup overgroup."""
    which = base_construction_for("Op_F1", p)
    ctx = overgroup_context(p, which)
    z = ctx.z_element()
    u = ctx.S.designated["u"]
    b_n_rows = [list(r.coords) for r in ctx.rows]
    sel = _basis_subset(ctx, b_n_rows)
    uc = ctx.class_of(u)
    theta_idx = next(i for i, ridx in enumerate(sel)
                     if ctx.rows[ridx].degree == p - 1
                     and _row_value_int(ctx.rows[ridx], uc) == -1)
    rows = [b_n_rows[i] for i in sel]
    cert, _ = auto_step_certificate(ctx, ctx.base, rows, z, u,
                                    f"Op_F1@p={p}", eta_idx=theta_idx)
    return cert


def _basis_subset(ctx: OvergroupContext, rows: list[list[int]]) -> list[int]:
    """Indices of restriction rows forming a basis of the stable lattice."""
    from .intlinalg import hnf, lattice_index
    from .stable import stable_character_basis

    lattice = stable_character_basis(ctx.irr_s, ctx.base)
    chosen: list[int] = []
    acc: list[list[int]] = []
    for i, row in enumerate(rows):
        cand = acc + [row]
        if hnf(cand).rank == len(cand):
            chosen.append(i)
            acc = cand
        if len(acc) == lattice.rank:
            break
    if len(acc) != lattice.rank or lattice_index(lattice.basis, acc) != 1:
        raise LookupError("restrictions do not span the stable lattice unimodularly")
    return chosen


# -- the two p = 5 certificate chains -------------------------------------------


CHAIN_LABELS = {"psu": [9, 6, 4, 2], "g": [3, 5, 7, 8, 10]}


def chain_certificates(family: str, p: int = 5) -> list[InductionCertificate]:
    """Iterated certificates merging the off-V classes one at a time.

    family "psu": base V:Gamma*_(4); family "g": base S:<b> (first step is the
    printed basis of the pruned system).
    """
    if p != 5:
        raise ValueError("the published chains are specific to p = 5")
    if family == "psu":
        ctx = overgroup_context(p, "N_gamma4star")
        first = None
    elif family == "g":
        ctx = overgroup_context(p, "N_b")
        first = certificate_g(p)
    else:
        raise ValueError(f"unknown chain family {family!r}")
    z = ctx.z_element()
    u_classes = ctx.u_class_indices
    labels = CHAIN_LABELS[family]
    certs: list[InductionCertificate] = []
    if family == "psu":
        certs.append(_psu_first_certificate(ctx))
    else:
        certs.append(first)
    fusion = certs[0].target
    b_rows = certs[0].b_f
    merged = {ctx.base.classes[u_classes[0]].rep}
    for step, label_i in enumerate(labels[1:], start=1):
        u_new = ctx.base.classes[u_classes[step]].rep
        cert, b_f = auto_step_certificate(
            ctx, fusion, b_rows, z, u_new,
            f"F({p}^4,7,{label_i})")
        certs.append(cert)
        fusion = cert.target
        b_rows = b_f
    return certs


def _psu_first_certificate(ctx: OvergroupContext) -> InductionCertificate:
    """First chain step with the printed stable set for the twisted subgroup.

    eta is the degree p^2-1 induction with value p-1 on the fused class (the
    single valid basis element; the printed eta list is reproduced by the
    per-step choices chi_0, chi_1, chi_2, chi_3)."""
    p = ctx.p
    z = ctx.z_element()
    u = ctx.S.designated["u"]
    uc = ctx.class_of(u)
    deg24 = p * p - 1
    one = pick_unique(ctx, degree=1)
    theta = pick_unique(ctx, degree=p - 1)
    chi0 = pick_unique(ctx, degree=deg24, at={uc: p - 1})
    chi_rest = [r for r in pick_rows(ctx, degree=deg24) if r is not chi0]
    sigmas = pick_rows(ctx, degree=p * (p * p - 1) // 4)
    sigmas_pr = pick_rows(ctx, degree=p * (p - 1) ** 2 // 4)
    if len(sigmas) != 2 or len(sigmas_pr) != 2 or len(chi_rest) != p - 1:
        raise LookupError("unexpected restriction family sizes for the twisted base")
    pairs = _pair_by_conjugate_values(ctx, sigmas, sigmas_pr)
    b_n = [one, theta, chi0] + chi_rest + sigmas + sigmas_pr
    b_f = [_combo(b_n, [(1, one)])]
    b_f += [_combo(b_n, [(1, s), (1, sp)]) for s, sp in pairs]
    b_f += [_combo(b_n, [(1, r)]) for r in chi_rest]
    b_f.append(_combo(b_n, [(1, chi0), (1, theta)]))
    b_f += [_combo(b_n, [(1, chi0), (1, s)]) for s, _ in pairs]
    target = apply_merges(ctx.base, [(z, u)])
    return InductionCertificate(
        label=f"F({p}^4,7,{CHAIN_LABELS['psu'][0]})", base=ctx.base, target=target,
        b_n=[list(r.coords) for r in b_n], b_f=b_f, eta=2, z=z, u=u)


def certificate_psu_59(p: int = 5) -> InductionCertificate:
    """Variant of the first chain step with eta the degree p-1 inflation."""
    cert = _psu_first_certificate(overgroup_context(p, "N_gamma4star"))
    return InductionCertificate(cert.label + ":theta", cert.base, cert.target,
                                cert.b_n, cert.b_f, 1, cert.z, cert.u)


def _pair_by_conjugate_values(ctx: OvergroupContext, sigmas, sigmas_pr):
    """Pair the split inductions whose irrational values are Galois-aligned."""
    out = []
    for s in sigmas:
        key = None
        for v in s.values:
            if not v.is_rational_integer():
                key = v.minimized()
                break
        mate = None
        for sp in sigmas_pr:
            vals = [v.minimized() for v in sp.values if not v.is_rational_integer()]
            if key is not None and any(v == -key or v == key for v in vals):
                mate = sp
                break
        if mate is None:
            mate = sigmas_pr[0 if not out else 1]
        if out and mate is out[0][1]:
            mate = sigmas_pr[0] if sigmas_pr[1] is mate else sigmas_pr[1]
        out.append((s, mate))
    return out


# -- the order-162 table-mode instance ------------------------------------------


def table_3492() -> TableFusion:
    """Explicit restricted-character data for the system on the order-81 group
    whose normaliser is realised by a group of order 162.

    alpha, beta, gamma are the roots of x^3 - 9x - 9 expressed in Z[zeta_9];
    centralizer orders are forced by column orthogonality and the index-2
    Clifford multiplicities (2 for extended rows, 1 for induced rows).
    """
    one = Cyclotomic.one()
    w = Cyclotomic.root_of_unity(3)
    wb = w.conjugate()
    z9 = Cyclotomic.root_of_unity(9)
    alpha = z9 + z9.galois(8) - (z9.galois(4) + z9.galois(5))
    beta = z9.galois(4) + z9.galois(5) - (z9.galois(2) + z9.galois(7))
    gamma = z9.galois(2) + z9.galois(7) - (z9 + z9.galois(8))

    def i(n: int) -> Cyclotomic:
        return Cyclotomic.integer(n)

    rows = [
        [i(1)] * 10,
        [i(2), i(2), i(2), i(2), i(2), i(-1), i(-1), i(-1), i(-1), i(-1)],
        [i(2), i(2), i(2), i(2), i(-1), i(2), i(-1), i(-1), i(-1), i(-1)],
        [i(2), i(2), i(2), i(2), i(-1), i(-1), i(2), i(-1), i(-1), i(-1)],
        [i(2), i(2), i(2), i(2), i(-1), i(-1), i(-1), i(2), i(2), i(2)],
        [i(3), i(3), w * 3, wb * 3, i(0), i(0), i(0), i(0), i(0), i(0)],
        [i(3), i(3), wb * 3, w * 3, i(0), i(0), i(0), i(0), i(0), i(0)],
        [i(6), i(-3), i(0), i(0), i(0), i(0), i(0), alpha, beta, gamma],
        [i(6), i(-3), i(0), i(0), i(0), i(0), i(0), beta, gamma, alpha],
        [i(6), i(-3), i(0), i(0), i(0), i(0), i(0), gamma, alpha, beta],
    ]
    return TableFusion(
        p=3,
        group_order=81,
        labels=[f"g{j}" for j in range(1, 11)],
        class_sizes=[1, 2, 3, 3, 18, 18, 18, 6, 6, 6],
        centralizer_orders=[81, 81, 27, 27, 9, 9, 9, 27, 27, 27],
        basis_values=rows,
        merge_groups=[[1, 5, 6]],  # the central class with the two off-V classes
        name="F(3^4,9,2)",
    )


TABLE_3492_IRR_MULTIPLICITIES = [2, 1, 1, 1, 1, 2, 2, 1, 1, 1]


def cubic_root_check() -> dict:
    """Exact evidence that the three irrational entries solve x^3 - 9x - 9."""
    tf = table_3492()
    alpha = tf.basis_values[7][7]
    beta = tf.basis_values[7][8]
    gamma = tf.basis_values[7][9]
    out = {}
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        out[name] = (v * v * v - v * 9 - 9).is_zero() and (v * v * v - v * 9 - 9) == 0
    out["sum_zero"] = (alpha + beta + gamma).is_zero()
    out["product_nine"] = (alpha * beta * gamma) == 9
    out["pair_sum"] = (alpha * beta + alpha * gamma + beta * gamma) == -9
    return out
