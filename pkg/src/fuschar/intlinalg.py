"""Exact integer matrix kernels: HNF, Smith form, fraction-free determinants,
p-adic valuations and lattice volume/index computations.

Matrices are lists of equal-length rows of arbitrary-precision ints (or
Cyclotomic entries where noted).  Everything is exact; no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    nb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * nb
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(nb):
                    acc[j] += x * bk[j]
        out.append(acc)
    return out


def transpose(m: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*m)] if m else []


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


@dataclass(frozen=True)
class HNFResult:
    hnf: list[list[int]]
    transform: list[list[int]]
    rank: int
    pivots: tuple[int, ...]


def hnf(matrix: list[list[int]]) -> HNFResult:
    """Row-style Hermite normal form with unimodular transform.

    transform @ matrix == hnf; pivots positive, entries above each pivot
    reduced into [0, pivot); zero rows pushed to the bottom.  Output is the
    canonical HNF of the row lattice, so it is deterministic.
    """
    h = [list(r) for r in matrix]
    m = len(h)
    u = identity_matrix(m)
    row = 0
    pivots = []
    ncols = len(h[0]) if h else 0
    for col in range(ncols):
        # gcd out column entries below `row`, keeping the minimal positive pivot
        pivot_row = None
        for i in range(row, m):
            if h[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            h[row], h[pivot_row] = h[pivot_row], h[row]
            u[row], u[pivot_row] = u[pivot_row], u[row]
        for i in range(row + 1, m):
            while h[i][col]:
                a, b = h[row][col], h[i][col]
                if b % a == 0:
                    q = b // a
                    _row_sub(h, u, i, row, q)
                else:
                    g, x, y = _xgcd(a, b)
                    _row_combine(h, u, row, i, x, y, a // g, b // g)
        if h[row][col] < 0:
            h[row] = [-v for v in h[row]]
            u[row] = [-v for v in u[row]]
        for i in range(row):
            q = h[i][col] // h[row][col]
            if q:
                _row_sub(h, u, i, row, q)
        pivots.append(col)
        row += 1
        if row == m:
            break
    return HNFResult(h, u, row, tuple(pivots))


def _row_sub(h, u, i, j, q):
    hi, hj = h[i], h[j]
    for k in range(len(hi)):
        hi[k] -= q * hj[k]
    ui, uj = u[i], u[j]
    for k in range(len(ui)):
        ui[k] -= q * uj[k]


def _row_combine(h, u, i, j, x, y, ag, bg):
    # rows (i, j) <- (x*i + y*j, -bg*i + ag*j); determinant of the 2x2 block is 1
    for mat in (h, u):
        ri, rj = mat[i], mat[j]
        for k in range(len(ri)):
            a, b = ri[k], rj[k]
            ri[k] = x * a + y * b
            rj[k] = -bg * a + ag * b


def kernel_rows(matrix: list[list[int]]) -> list[list[int]]:
    """Basis (as rows, HNF-canonical) of {x : x @ matrix = 0} over Z."""
    res = hnf(matrix)
    rows = [res.transform[i] for i in range(res.rank, len(matrix))]
    if not rows:
        return []
    return [r for r in hnf(rows).hnf if any(r)]


def solve_left(basis: list[list[int]], target: list[int]) -> list[int] | None:
    """Integer x with x @ basis == target, or None."""
    res = hnf(basis)
    h, u = res.hnf, res.transform
    y = [0] * len(basis)
    rem = list(target)
    for i, col in enumerate(res.pivots):
        q, r = divmod(rem[col], h[i][col])
        if r:
            return None
        y[i] = q
        if q:
            hi = h[i]
            for k in range(len(rem)):
                rem[k] -= q * hi[k]
    if any(rem):
        return None
    return [sum(y[i] * u[i][j] for i in range(len(y))) for j in range(len(basis))]


def row_space_contains(basis: list[list[int]], vec: list[int]) -> bool:
    return solve_left(basis, vec) is not None


def smith_invariants(matrix: list[list[int]]) -> list[int]:
    """Nonzero elementary divisors d1 | d2 | ... of an integer matrix."""
    a = [list(r) for r in matrix]
    m = len(a)
    n = len(a[0]) if a else 0
    divisors = []
    top = 0
    while True:
        pos = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j]:
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            break
        i0, j0 = pos
        a[top], a[i0] = a[i0], a[top]
        for r in a:
            r[top], r[j0] = r[j0], r[top]
        while True:
            # clear column `top`
            for i in range(top + 1, m):
                while a[i][top]:
                    if a[i][top] % a[top][top] == 0:
                        q = a[i][top] // a[top][top]
                        for k in range(top, n):
                            a[i][k] -= q * a[top][k]
                    else:
                        g, x, y = _xgcd(a[top][top], a[i][top])
                        ag, bg = a[top][top] // g, a[i][top] // g
                        for k in range(top, n):
                            s, t = a[top][k], a[i][k]
                            a[top][k] = x * s + y * t
                            a[i][k] = -bg * s + ag * t
            # clear row `top`; may disturb the column, hence the outer loop
            dirty = False
            for j in range(top + 1, n):
                while a[top][j]:
                    if a[top][j] % a[top][top] == 0:
                        q = a[top][j] // a[top][top]
                        for i in range(top, m):
                            a[i][j] -= q * a[i][top]
                    else:
                        g, x, y = _xgcd(a[top][top], a[top][j])
                        ag, bg = a[top][top] // g, a[top][j] // g
                        for i in range(top, m):
                            s, t = a[i][top], a[i][j]
                            a[i][top] = x * s + y * t
                            a[i][j] = -bg * s + ag * t
                        dirty = True
            if not (dirty and any(a[i][top] for i in range(top + 1, m))):
                break
        divisors.append(abs(a[top][top]))
        top += 1
        if top == m or top == n:
            break
    # enforce the divisibility chain
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            di, dj = divisors[i], divisors[j]
            if dj % di:
                g = gcd(di, dj)
                divisors[i], divisors[j] = g, di * dj // g
    return divisors


def det_exact(matrix: list[list]):
    """Exact determinant by fraction-free (Bareiss) elimination.

    Entries may be ints or Cyclotomic values; divisions are exact in the
    ambient domain and verified, so an inexact division signals a bug.
    """
    from .cyclotomic import Cyclotomic, exact_div

    n = len(matrix)
    if n == 0:
        return 1
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant requires a square matrix")
    cyclo = any(isinstance(x, Cyclotomic) for row in matrix for x in row)
    if cyclo:
        a = [[x if isinstance(x, Cyclotomic) else Cyclotomic.integer(x) for x in row]
             for row in matrix]

        def is_zero(v):
            return v.is_zero()

        def div(x, y):
            return exact_div(x, y)

        prev: object = Cyclotomic.one()
    else:
        a = [list(r) for r in matrix]

        def is_zero(v):
            return v == 0

        def div(x, y):
            q, r = divmod(x, y)
            if r:
                raise ArithmeticError("inexact division in Bareiss elimination")
            return q

        prev = 1
    sign = 1
    for k in range(n - 1):
        if is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
            if swap is None:
                return Cyclotomic.zero() if cyclo else 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * akk - aik * a[k][j], prev)
            a[i][k] = Cyclotomic.zero() if cyclo else 0
        prev = akk
    result = a[n - 1][n - 1]
    if sign < 0:
        result = -result
    return result


def det_gram_int(matrix: list[list]) -> int:
    """Determinant of a matrix known to be a rational integer (asserted)."""
    from .cyclotomic import Cyclotomic

    d = det_exact(matrix)
    if isinstance(d, Cyclotomic):
        return d.rational_value()
    return d


def p_valuation(n: int, p: int) -> int:
    """Largest k with p**k | n; rejects n = 0."""
    if n == 0:
        raise ValueError("p-adic valuation of 0 is undefined (singular input upstream)")
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def p_part(n: int, p: int) -> int:
    return p ** p_valuation(n, p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def change_of_basis(ambient: list[list[int]], sub: list[list[int]]) -> list[list[int]]:
    """Rows of `sub` expressed over `ambient`; raises if not contained."""
    rows = []
    for vec in sub:
        sol = solve_left(ambient, list(vec))
        if sol is None:
            raise ValueError("row space not contained in ambient lattice")
        rows.append(sol)
    return rows


def lattice_index(ambient: list[list[int]], sub: list[list[int]]) -> int:
    """Index |ambient : sub| for a finite-index sublattice, via Smith divisors.

    Cross-checked against |det| of the change-of-basis matrix (the two must
    agree; a mismatch would signal an arithmetic bug).
    """
    t = change_of_basis(ambient, sub)
    if len(t) != len(ambient):
        raise ValueError("rank mismatch: sublattice is not finite index")
    d = det_exact(t)
    if d == 0:
        raise ValueError("rank mismatch: sublattice is not finite index")
    divisors = smith_invariants(t)
    prod = 1
    for e in divisors:
        prod *= e
    assert prod == abs(d), "Smith divisors disagree with determinant"
    return prod


def lattice_volume_index(l_basis: list[list[int]], m_basis: list[list[int]]) -> tuple[int, int, int]:
    """(vol L, vol M, index |L:M|) for square full-rank bases with M <= L.

    The index is computed from Smith elementary divisors of the
    change-of-basis matrix; with vol = |det basis| the orientation that
    holds is index = vol(M) / vol(L).
    """
    n = len(l_basis)
    if n == 0 or len(l_basis[0]) != n or len(m_basis) != n or len(m_basis[0]) != n:
        raise ValueError("volume/index requires square bases of equal rank")
    vol_l = abs(det_exact(l_basis))
    vol_m = abs(det_exact(m_basis))
    if vol_l == 0 or vol_m == 0:
        raise ValueError("bases must be full rank")
    index = lattice_index(l_basis, m_basis)
    assert index * vol_l == vol_m, "index must equal vol(M)/vol(L)"
    return vol_l, vol_m, index
