import random

import pytest

from fuschar.cyclotomic import Cyclotomic, cyclotomic_polynomial, exact_div


def z(e, k=1):
    return Cyclotomic.root_of_unity(e, k)


def test_i_squared():
    assert z(4) * z(4) == -1


def test_sum_of_pth_roots_is_minus_one():
    for p in (3, 5, 7, 11):
        total = Cyclotomic.zero()
        for i in range(1, p):
            total = total + z(p, i)
        assert total == -1


def test_conjugate_of_zeta8():
    assert z(8).conjugate() == z(8, 7)
    assert z(8) * z(8).conjugate() == 1


def test_canonical_reduction():
    # zeta_6^2 = zeta_6 - 1 after reduction by the 6th cyclotomic polynomial
    assert z(6, 2) == z(6) - 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    deg = len(cyclotomic_polynomial(8)) - 1
    assert all(c == 0 for c in z(8, 5).coeffs[deg:])


def test_embed_preserves_value():
    a = z(3)
    assert a.embedded(12) == z(12, 4)
    assert a.embedded(12).minimized().order == 3
    with pytest.raises(ValueError):
        a.embedded(10)


def test_rational_detection():
    assert Cyclotomic.integer(-7).is_rational_integer()
    assert (z(8, 4)).rational_value() == -1
    assert not z(8).is_rational_integer()
    with pytest.raises(ValueError):
        z(8).rational_value()


def test_mixed_order_arithmetic():
    assert z(2) == Cyclotomic.integer(-1)
    assert z(3) + z(4) == z(12, 4) + z(12, 3)
    assert hash(z(6, 3)) == hash(Cyclotomic.integer(-1))


def test_exact_division():
    a = Cyclotomic(12, [2, 4, 0, 6])
    b = Cyclotomic(12, [1, 2, 0, 3])
    assert exact_div(a, b) == 2
    with pytest.raises(ArithmeticError):
        exact_div(Cyclotomic.integer(3), Cyclotomic.integer(2))
    with pytest.raises(ZeroDivisionError):
        exact_div(a, Cyclotomic.zero())


def test_division_by_unit_roundtrips():
    a = Cyclotomic(8, [1, -2, 0, 5])
    q = exact_div(a * z(8, 3), z(8, 3))
    assert q == a


def random_cyclo(rng, e):
    return Cyclotomic(e, [rng.randint(-4, 4) for _ in range(e)])


def test_conjugation_is_a_ring_involution():
    rng = random.Random(20240801)
    for e in (5, 8, 9, 12):
        for _ in range(25):
            a, b = random_cyclo(rng, e), random_cyclo(rng, e)
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert a.conjugate().conjugate() == a
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_norm_of_root_times_integer_is_nonnegative():
    rng = random.Random(7)
    for _ in range(20):
        e = rng.choice([4, 5, 8, 12])
        val = z(e, rng.randrange(e)) * rng.randint(-5, 5)
        norm = val * val.conjugate()
        assert norm.is_rational_integer() and norm.rational_value() >= 0


def test_json_round_trip():
    a = Cyclotomic(12, [1, -2, 3, 0, 1])
    assert Cyclotomic.from_json(a.to_json()) == a
