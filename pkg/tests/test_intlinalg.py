import random
from itertools import product

import pytest

from fuschar.cyclotomic import Cyclotomic
from fuschar.intlinalg import (
    det_exact,
    hnf,
    kernel_rows,
    lattice_index,
    lattice_volume_index,
    mat_mul,
    p_part,
    p_valuation,
    smith_invariants,
    solve_left,
)


def test_hnf_examples():
    r = hnf([[2, 0], [1, 1]])
    assert r.hnf == [[1, 1], [0, 2]] and r.rank == 2
    r = hnf([[1, 0], [0, 1]])
    assert r.hnf == [[1, 0], [0, 1]] and r.transform == [[1, 0], [0, 1]]
    r = hnf([[3, 3], [6, 6]])
    assert r.hnf == [[3, 3], [0, 0]] and r.rank == 1


def random_matrix(rng, m, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def test_hnf_transform_and_idempotence():
    rng = random.Random(1)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        r = hnf(m)
        assert mat_mul(r.transform, m) == r.hnf
        assert abs(det_exact(r.transform)) == 1
        again = hnf(r.hnf)
        assert again.hnf == r.hnf


def cofactor_det(m):
    """Independent oracle: textbook minor expansion."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def test_det_examples():
    assert det_exact([[1, 1], [7, -1]]) == -8  # the 2x2 transitive-shape matrix
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    z3 = Cyclotomic.root_of_unity(3)
    zero = Cyclotomic.zero()
    assert det_exact([[z3, zero], [zero, z3 * z3]]) == 1


def test_det_against_cofactor_oracle():
    rng = random.Random(2)
    for _ in range(120):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, n, -5, 5)
        assert det_exact(m) == cofactor_det(m)


def test_det_cyclotomic_random_vs_conjugate():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(1, 3)
        m = [[Cyclotomic(5, [rng.randint(-2, 2) for _ in range(5)])
              for _ in range(n)] for _ in range(n)]
        d = det_exact(m)
        conj = det_exact([[v.conjugate() for v in row] for row in m])
        assert d.conjugate() == conj


def test_p_valuation():
    assert p_valuation(2 ** 22, 2) == 22
    assert p_valuation(1, 5) == 0
    assert p_valuation(-24, 2) == 3
    assert p_part(-24, 2) == 8
    with pytest.raises(ValueError):
        p_valuation(0, 2)
    with pytest.raises(ValueError):
        p_valuation(12, 1)


def brute_force_index(m_basis, box=8):
    """Oracle: count coset representatives of M in Z^2 over a box of points."""
    def in_m(vec):
        return solve_left(m_basis, list(vec)) is not None

    reps = []
    for pt in product(range(box), repeat=2):
        if not any(in_m((pt[0] - r[0], pt[1] - r[1])) for r in reps):
            reps.append(pt)
    return len(reps)


def test_lattice_volume_index_examples():
    assert lattice_volume_index([[1, 0], [0, 1]], [[2, 0], [0, 2]]) == (1, 4, 4)
    assert lattice_volume_index([[3, 1], [0, 2]], [[3, 1], [0, 2]])[2] == 1
    m = [[1, 1], [0, 3]]
    vol_l, vol_m, index = lattice_volume_index([[1, 0], [0, 1]], m)
    assert index == 3 == brute_force_index(m)
    assert vol_m == 3 and vol_l == 1


def test_lattice_errors():
    with pytest.raises(ValueError):
        lattice_volume_index([[1, 0], [0, 1]], [[1, 0], [2, 0]])  # rank deficient
    with pytest.raises(ValueError):
        lattice_index([[2, 0], [0, 2]], [[1, 0], [0, 1]])  # not contained


def test_smith_divisor_chain():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, n)
        divs = smith_invariants(m)
        for a, b in zip(divs, divs[1:]):
            assert b % a == 0
        d = det_exact(m)
        if d:
            prod = 1
            for x in divs:
                prod *= x
            assert prod == abs(d)


def test_kernel_and_solve():
    a = [[1], [-1], [2]]
    k = kernel_rows(a)
    assert len(k) == 2
    for row in k:
        assert sum(x * y[0] for x, y in zip(row, a)) == 0
    sol = solve_left([[2, 0], [0, 3]], [4, 9])
    assert sol == [2, 3]
    assert solve_left([[2, 0], [0, 3]], [1, 0]) is None
