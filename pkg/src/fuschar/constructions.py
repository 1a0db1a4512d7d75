"""The p^4 group family: S = V:U for V the binary quadratic forms over F_p,
the overgroups V:Gamma_(e) (and twisted variants) and S:<b>, orbit analyses
of the Gamma-action on V, and brute-force point counts over PGL_2(p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import Cyclotomic
from .groups import FiniteGroup, FpMat, conjugacy_classes, enumerate_group
from .intlinalg import is_prime


def smallest_primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise ValueError(f"no primitive root modulo {p}")


def is_square_mod(a: int, p: int) -> bool:
    a %= p
    return any((x * x) % p == a for x in range(p))


def smallest_nonresidue_epsilon(p: int) -> int:
    """Smallest eps in F_p* with -eps a quadratic non-residue."""
    for eps in range(1, p):
        if not is_square_mod(-eps, p):
            return eps
    raise ValueError(f"no valid epsilon modulo {p}")


@dataclass(frozen=True)
class ConstructionParams:
    p: int
    epsilon: int
    lam: int
    b: int

    @classmethod
    def for_prime(cls, p: int) -> "ConstructionParams":
        if p == 2 or not is_prime(p):
            raise ValueError(f"construction needs an odd prime, got {p}")
        root = smallest_primitive_root(p)
        return cls(p, smallest_nonresidue_epsilon(p), root, root)


# -- the action of (F_p^x x GL_2) on binary quadratic forms -------------------
#
# Coordinates on V are (c1, c2, c3) for c1*x^2 + c2*xy + c3*y^2.  The pair
# (lam, [[a, b], [c, d]]) sends f(x, y) to lam * f(a x + b y, c x + d y).


def form_action_matrix(p: int, lam: int, a: int, b: int, c: int, d: int) -> FpMat:
    cols = [
        (a * a, 2 * a * b, b * b),          # image of x^2
        (a * c, a * d + b * c, b * d),      # image of xy
        (c * c, 2 * c * d, d * d),          # image of y^2
    ]
    rows = [[lam * cols[j][i] % p for j in range(3)] for i in range(3)]
    return FpMat.from_rows(p, rows)


def mat_vec(m: FpMat, v: tuple[int, int, int]) -> tuple[int, int, int]:
    p, r = m.p, m.rows()
    return tuple(sum(r[i][j] * v[j] for j in range(3)) % p for i in range(3))


def u_linear(p: int) -> FpMat:
    return form_action_matrix(p, 1, 1, 0, 1, 1)


def affine(linear: FpMat, translation: tuple[int, int, int]) -> FpMat:
    p = linear.p
    r = linear.rows()
    rows = [r[i] + [translation[i] % p] for i in range(3)] + [[0, 0, 0, 1]]
    return FpMat.from_rows(p, rows)


def translation(p: int, v: tuple[int, int, int]) -> FpMat:
    return affine(FpMat.identity(p, 3), v)


def linear_part(x: FpMat) -> FpMat:
    r = x.rows()
    return FpMat.from_rows(x.p, [row[:3] for row in r[:3]])


def translation_part(x: FpMat) -> tuple[int, int, int]:
    r = x.rows()
    return (r[0][3], r[1][3], r[2][3])


def is_translation(x: FpMat) -> bool:
    return linear_part(x).is_identity()


GAMMA_VARIANTS = ("gamma", "gamma2", "gamma4star")


def _gl2_generators(p: int, lam: int) -> list[tuple[int, int, int, int]]:
    return [(lam, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 0)]


def _det2(a, b, c, d, p):
    return (a * d - b * c) % p


@lru_cache(maxsize=None)
def gamma_group(p: int, variant: str) -> FiniteGroup:
    """Gamma_(1), Gamma_(2) or Gamma*_(4) as a matrix group on V."""
    params = ConstructionParams.for_prime(p)
    lam = params.lam
    if variant not in GAMMA_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "gamma4star" and p % 4 != 1:
        raise ValueError("the twisted index-4 subgroup needs p = 1 (mod 4)")
    e = {"gamma": 1, "gamma2": 2, "gamma4star": 4}[variant]
    gens = []
    for a, b, c, d in _gl2_generators(p, lam):
        det = _det2(a, b, c, d, p)
        scale = pow(det, -1, p)
        if variant == "gamma4star" and not is_square_mod(det, p):
            scale = (-scale) % p
        gens.append(form_action_matrix(p, scale, a, b, c, d))
    gens.append(form_action_matrix(p, pow(lam, e, p), 1, 0, 0, 1))
    return enumerate_group(gens)


def _designated_v_elements(p: int, params: ConstructionParams) -> dict:
    eps, lam = params.epsilon, params.lam
    return {
        "z": translation(p, (1, 0, 0)),
        "v1": translation(p, (1, 0, 0)),
        "v2": translation(p, (0, 1, 0)),
        "v3": translation(p, (0, 0, 1)),
        "v1+e*v3": translation(p, (1, 0, eps)),
        "lam*v2": translation(p, (0, lam, 0)),
        "lam*(v1+e*v3)": translation(p, (lam, 0, lam * eps % p)),
    }


@lru_cache(maxsize=None)
def build_group(p: int, which: str) -> FiniteGroup:
    """Build S, one of the V:Gamma overgroups, or S:<b>.

    which: "S" | "N_gamma" | "N_gamma2" | "N_gamma4star" | "N_b".
    The affine 4x4 representation puts V in the translation part.
    """
    params = ConstructionParams.for_prime(p)
    designated = _designated_v_elements(p, params)
    u_aff = affine(u_linear(p), (0, 0, 0))
    designated["u"] = u_aff
    v_gens = [translation(p, (1, 0, 0)), translation(p, (0, 1, 0)),
              translation(p, (0, 0, 1))]
    if which == "S":
        return enumerate_group(v_gens + [u_aff], designated=designated)
    if which == "N_b":
        b = params.b
        b_aff = affine(form_action_matrix(p, b, 1, 0, 0, b), (0, 0, 0))
        designated["b"] = b_aff
        return enumerate_group(v_gens + [u_aff, b_aff], designated=designated)
    if which in ("N_gamma", "N_gamma2", "N_gamma4star"):
        variant = {"N_gamma": "gamma", "N_gamma2": "gamma2",
                   "N_gamma4star": "gamma4star"}[which]
        gam = gamma_group(p, variant)
        gens = v_gens + [affine(m, (0, 0, 0)) for m in gam.generators]
        return enumerate_group(gens, designated=designated)
    if which == "Y_H":
        raise ValueError("the (C_p x C_p):GL_2(p) model is out of scope; "
                         "element-level fusion via merges covers its effect")
    raise ValueError(f"unknown construction {which!r}")


@lru_cache(maxsize=None)
def sylow_inside(p: int, which: str) -> FiniteGroup:
    """The designated copy of S = V:U inside the overgroup `which`."""
    n = build_group(p, which)
    u_aff = n.designated["u"]
    v_gens = [translation(p, (1, 0, 0)), translation(p, (0, 1, 0)),
              translation(p, (0, 0, 1))]
    s = enumerate_group(v_gens + [u_aff], designated=dict(n.designated))
    assert s.is_subgroup_of(n)
    return s


# -- orbit analysis of Gamma on V ---------------------------------------------


@dataclass(frozen=True)
class OrbitInfo:
    rep: tuple[int, int, int]
    size: int
    stabilizer_order: int
    stabilizer_abelian: bool


def gamma_orbit_analysis(p: int, variant: str) -> list[OrbitInfo]:
    """Nontrivial orbits of the chosen Gamma-group on V, with stabilizer
    orders and abelianness computed by direct counting."""
    gam = gamma_group(p, variant)
    vectors = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)
               if (a, b, c) != (0, 0, 0)]
    seen: set = set()
    orbits = []
    for v in vectors:
        if v in seen:
            continue
        orbit = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gam.generators:
                    img = mat_vec(g, w)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        seen.update(orbit)
        stab = [g for g in gam.elements if mat_vec(g, v) == v]
        assert len(stab) * len(orbit) == gam.order
        abelian = all(x * y == y * x for x in stab for y in stab)
        orbits.append(OrbitInfo(v, len(orbit), len(stab), abelian))
    orbits.sort(key=lambda o: (o.size, o.rep))
    return orbits


def orbit_containing(orbits: list[OrbitInfo], gam: FiniteGroup,
                     target: tuple[int, int, int]) -> OrbitInfo:
    for info in orbits:
        orbit = {info.rep}
        frontier = [info.rep]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gam.generators:
                    img = mat_vec(g, w)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        if target in orbit:
            return info
    raise ValueError(f"{target} lies in no computed orbit")


# -- brute-force point counts over PGL_2(p) ------------------------------------


PSI_KEYS = {"psi100": (1, 0, 0), "psi010": (0, 1, 0)}
V_KEYS = {"v1": (1, 0, 0), "v2": (0, 1, 0)}


def _psi_vector(key: str, params: ConstructionParams) -> tuple[int, int, int]:
    if key in PSI_KEYS:
        return PSI_KEYS[key]
    if key == "psi10e":
        return (1, 0, params.epsilon)
    raise ValueError(f"unknown character key {key!r}")


def _v_vector(key: str, params: ConstructionParams) -> tuple[int, int, int]:
    if key in V_KEYS:
        return V_KEYS[key]
    if key == "v1+e*v3":
        return (1, 0, params.epsilon)
    raise ValueError(f"unknown element key {key!r}")


def pgl2_cosets(p: int):
    """Scalar-normalised representatives of PGL_2(p): first nonzero entry 1."""
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 0:
                        continue
                    first = next(x for x in (a, b, c, d) if x)
                    if first != 1:
                        continue
                    yield (a, b, c, d)


def count_n_v_psi(p: int, v_key: str, psi_key: str) -> int:
    """#{g in PGL_2(p) : <psi, g.v> = 0}, counted over normalised cosets.

    The pairing is derived from the quadratic-form action, replacing any
    closed-form point count by enumeration.
    """
    params = ConstructionParams.for_prime(p)
    vvec = _v_vector(v_key, params)
    avec = _psi_vector(psi_key, params)
    count = 0
    for a, b, c, d in pgl2_cosets(p):
        m = form_action_matrix(p, 1, a, b, c, d)
        img = mat_vec(m, vvec)
        if sum(x * y for x, y in zip(avec, img)) % p == 0:
            count += 1
    return count


def table3_expected(p: int) -> dict[tuple[str, str], int]:
    """The nine symbolic zero-counts evaluated at p."""
    return {
        ("v1", "psi100"): p * (p - 1),
        ("v1", "psi010"): 2 * p * (p - 1),
        ("v1", "psi10e"): 0,
        ("v2", "psi100"): 2 * p * (p - 1),
        ("v2", "psi010"): (p - 1) ** 2,
        ("v2", "psi10e"): p * p - 1,
        ("v1+e*v3", "psi100"): 0,
        ("v1+e*v3", "psi010"): p * p - 1,
        ("v1+e*v3", "psi10e"): (p + 1) ** 2,
    }


def gamma_stabilizer_of_character(p: int, psi_key: str,
                                  variant: str = "gamma") -> FiniteGroup:
    """Subgroup of Gamma fixing the V-character with exponent vector psi."""
    params = ConstructionParams.for_prime(p)
    avec = _psi_vector(psi_key, params)
    gam = gamma_group(p, variant)
    members = []
    for g in gam.elements:
        rows = g.rows()
        img = tuple(sum(avec[i] * rows[i][j] for i in range(3)) % p for j in range(3))
        if img == avec:
            members.append(g)
    return enumerate_group(members, max_order=gam.order)


def induced_value_formula(p: int, psi_key: str, rho_degree: int,
                          stab_order: int, v_key: str) -> int:
    """p * rho(1) / |I(psi)| * (n_{v,psi} - p^2 + 1), checked integral."""
    n = count_n_v_psi(p, v_key, psi_key)
    num = p * rho_degree * (n - p * p + 1)
    q, r = divmod(num, stab_order)
    if r:
        raise ArithmeticError("induced-value formula did not produce an integer")
    return q


def induced_value_direct(p: int, psi_key: str, rho_degree: int, v_key: str) -> Cyclotomic:
    """Direct induction of (extension of psi) tensor rho from V:I(psi) up to
    V:Gamma, evaluated at the V-element; the independent check on the formula."""
    from .chartable import ClassFunction, dixon_character_table, induce_class_function

    params = ConstructionParams.for_prime(p)
    avec = _psi_vector(psi_key, params)
    vvec = _v_vector(v_key, params)
    n = build_group(p, "N_gamma")
    stab = gamma_stabilizer_of_character(p, psi_key)
    h_gens = [translation(p, (1, 0, 0)), translation(p, (0, 1, 0)),
              translation(p, (0, 0, 1))] + \
        [affine(m, (0, 0, 0)) for m in stab.generators]
    h = enumerate_group(h_gens)
    stab_table = dixon_character_table(stab)
    rho = next(chi for chi in stab_table.chars if chi.degree_int() == rho_degree)
    stab_classes = stab_table.classes
    h_classes = conjugacy_classes(h)
    values = []
    for cls in h_classes.classes:
        t = translation_part(cls.rep)
        lin = linear_part(cls.rep)
        exponent = sum(a * x for a, x in zip(avec, t)) % p
        psi_val = Cyclotomic.root_of_unity(p, exponent)
        rho_val = rho.values[stab_classes.class_index_of(stab, lin)]
        values.append(psi_val * rho_val)
    theta = ClassFunction(tuple(values))
    induced = induce_class_function(theta, h, n)
    n_classes = conjugacy_classes(n)
    return induced.values[n_classes.class_index_of(n, translation(p, vvec))]
