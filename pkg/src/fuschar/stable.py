"""The lattice of fusion-stable virtual characters: HNF bases, decomposition
and Gram matrices of restricted irreducibles, and bounded searches for
indecomposable stable characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .chartable import CharacterTable, ClassFunction, inner_product
from .fusion import FusionData
from .groups import FiniteGroup
from .intlinalg import det_exact, hnf, kernel_rows, mat_mul, solve_left, transpose


@dataclass
class StableLattice:
    fusion: FusionData
    irr_s: CharacterTable
    basis: list[list[int]]  # rows = basis virtual characters in Irr(S) coordinates
    rank: int

    def class_function(self, row: list[int]) -> ClassFunction:
        return self.irr_s.combination(row)

    def basis_class_functions(self) -> list[ClassFunction]:
        return [self.class_function(row) for row in self.basis]

    def contains(self, irr_coords: list[int]) -> bool:
        return solve_left(self.basis, list(irr_coords)) is not None


def stable_character_basis(irr_s: CharacterTable, fusion: FusionData) -> StableLattice:
    """HNF basis of the virtual characters constant on every fusion class.

    One integer constraint per fusion class, per extra S-class it contains,
    per cyclotomic coordinate; the lattice is the integral kernel.  The rank
    always equals the number of fusion classes.
    """
    if irr_s.group is not fusion.S and irr_s.group.elements != fusion.S.elements:
        raise ValueError("character table and fusion data disagree on S")
    e = irr_s.conductor
    k_s = irr_s.k
    constraints: list[list[int]] = []
    for fc in fusion.classes:
        anchor = fc.s_class_indices[0]
        for other in fc.s_class_indices[1:]:
            deltas = [chi.values[other].embedded(e) - chi.values[anchor].embedded(e)
                      for chi in irr_s.chars]
            for coeff_idx in range(e):
                row = [d.coeffs[coeff_idx] for d in deltas]
                if any(row):
                    constraints.append(row)
    if constraints:
        basis = kernel_rows(transpose(constraints))
    else:
        basis = [[1 if i == j else 0 for j in range(k_s)] for i in range(k_s)]
    lattice = StableLattice(fusion, irr_s, basis, len(basis))
    if lattice.rank != fusion.k:
        raise AssertionError(
            f"stable lattice rank {lattice.rank} != class count {fusion.k}")
    return lattice


def irr_coordinates(chi: ClassFunction, irr_s: CharacterTable) -> list[int]:
    """Multiplicities of chi over Irr(S) (exact inner products)."""
    coords = []
    for psi in irr_s.chars:
        val = inner_product(chi, psi, irr_s.classes, irr_s.group.order)
        coords.append(val.rational_value())
    return coords


@dataclass
class DecompositionData:
    d_matrix: list[list[int]]  # rows Irr(G), columns the stable basis
    c_matrix: list[list[int]]
    det_c: int
    outside_rows: list[int]  # Irr(G) rows whose restriction left the lattice


def decomposition_matrix(irr_g: CharacterTable, S: FiniteGroup,
                         lattice: StableLattice) -> DecompositionData:
    """Restrictions of Irr(G) solved over the stable basis; C = D^T D.

    A restriction outside the lattice is legal only when S is not Sylow in
    G; such rows are reported, not fatal.
    """
    from .chartable import restrict_table

    restricted, _ = restrict_table(irr_g, S)
    # restrictions equal to a single irreducible (always the case for abelian
    # groups) resolve by exact lookup instead of inner products
    irr_index = {tuple(v.key() for v in psi.values): j
                 for j, psi in enumerate(lattice.irr_s.chars)}
    k_s = lattice.irr_s.k
    rows = []
    outside = []
    for i, chi in enumerate(restricted):
        hit = irr_index.get(tuple(v.key() for v in chi.values))
        if hit is not None:
            coords = [1 if j == hit else 0 for j in range(k_s)]
        else:
            coords = irr_coordinates(chi, lattice.irr_s)
        sol = solve_left(lattice.basis, coords)
        if sol is None:
            outside.append(i)
        else:
            rows.append(sol)
    if outside and lattice.fusion.sylow_in_overgroup:
        raise AssertionError("Sylow restriction left the stable lattice")
    c = mat_mul(transpose(rows), rows)
    det_c = det_exact(c) if c else 1
    return DecompositionData(rows, c, det_c, outside)


# -- indecomposable stable characters -----------------------------------------


def _pivot_columns(basis: list[list[int]], degrees: list[int]) -> list[int]:
    """Column set with invertible minor, greedily preferring large degrees."""
    r = len(basis)
    order = sorted(range(len(degrees)), key=lambda j: (-degrees[j], j))
    chosen: list[int] = []
    rows_so_far: list[list[int]] = []
    for j in order:
        cand = rows_so_far + [[row[j] for row in basis]]
        if len(hnf(transpose(cand)).pivots) == len(cand):
            chosen.append(j)
            rows_so_far = cand
        if len(chosen) == r:
            break
    if len(chosen) != r:
        raise AssertionError("stable basis has deficient column rank")
    return chosen


def genuine_stable_characters(lattice: StableLattice, degree_bound: int,
                              cap: int = 5_000_000) -> tuple[list[tuple[int, ...]], bool]:
    """All nonzero stable characters with nonnegative Irr(S)-multiplicities
    and degree <= degree_bound.  Returns (characters, complete_flag)."""
    degrees = lattice.irr_s.degrees()
    basis = lattice.basis
    r = lattice.rank
    piv = _pivot_columns(basis, degrees)
    minor = [[Fraction(basis[i][j]) for j in piv] for i in range(r)]
    inv = _fraction_inverse(minor)
    ranges = [range(degree_bound // degrees[j] + 1) for j in piv]
    count = 1
    for rg in ranges:
        count *= len(rg)
    complete = count <= cap
    found = []
    seen = 0
    for yp in product(*ranges):
        seen += 1
        if seen > cap:
            break
        if not any(yp):
            continue
        coeffs = [sum(Fraction(yp[i]) * inv[i][j] for i in range(r)) for j in range(r)]
        if any(c.denominator != 1 for c in coeffs):
            continue
        vec = [0] * len(degrees)
        for i, c in enumerate(coeffs):
            ci = int(c)
            if ci:
                for j, b in enumerate(basis[i]):
                    vec[j] += ci * b
        if any(v < 0 for v in vec):
            continue
        if sum(v * d for v, d in zip(vec, degrees)) > degree_bound:
            continue
        found.append(tuple(vec))
    found.sort(key=lambda v: (sum(x * d for x, d in zip(v, degrees)), v))
    return found, complete


def _fraction_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def indecomposables_bounded(lattice: StableLattice, degree_bound: int,
                            cap: int = 5_000_000):
    """Stable genuine characters of degree <= bound not expressible as a sum
    of two such; complete only up to the bound (flag in the result)."""
    genuine, complete = genuine_stable_characters(lattice, degree_bound, cap)
    ind = []
    for pos, chi in enumerate(genuine):
        # proper parts have strictly smaller degree, so they precede chi in
        # the degree-sorted list; the complement chi - psi is then genuine
        # automatically (nonnegative, nonzero, and in the lattice).
        decomposable = any(
            all(a <= b for a, b in zip(psi, chi)) and psi != chi
            for psi in genuine[:pos])
        if not decomposable:
            ind.append(chi)
    return ind, complete


def factoriality_check(lattice: StableLattice, indecomposables: list) -> bool:
    """|Ind| = k(F) means unique decomposition (up to the search bound)."""
    return len(indecomposables) == lattice.fusion.k
