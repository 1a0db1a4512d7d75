from math import gcd

from fuschar.chartable import dixon_character_table, restrict_table
from fuschar.fusion import apply_merges, full_merge, fusion_from_group, fusion_of_self
from fuschar.groups import cyclic_group, standard_group, sylow_subgroup
from fuschar.intlinalg import lattice_index
from fuschar.stable import (
    decomposition_matrix,
    factoriality_check,
    genuine_stable_characters,
    indecomposables_bounded,
    irr_coordinates,
    stable_character_basis,
)


def test_self_fusion_gives_identity_basis():
    s = cyclic_group(8)
    tab = dixon_character_table(s)
    lattice = stable_character_basis(tab, fusion_of_self(s, 2))
    n = tab.k
    assert lattice.basis == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def c8_merged_lattice():
    c8 = cyclic_group(8)
    a = c8.designated["a"]
    tab = dixon_character_table(c8)
    merged = apply_merges(fusion_of_self(c8, 2),
                          [(a * a, a * a * a * a * a * a)])
    return c8, a, tab, stable_character_basis(tab, merged)


def test_c8_lattice_span_matches_listed_basis():
    c8, a, tab, lattice = c8_merged_lattice()
    assert lattice.rank == 7
    # identify chi_j by its value at the generator class: chi_j(a) = zeta_8^j
    sc = tab.classes
    a_idx = sc.class_index_of(c8, a)
    from fuschar.cyclotomic import Cyclotomic

    position = {}
    for col, chi in enumerate(tab.chars):
        val = chi.values[a_idx]
        j = next(k for k in range(8) if val == Cyclotomic.root_of_unity(8, k))
        position[j] = col

    def vec(*js):
        out = [0] * 8
        for j in js:
            out[position[j]] += 1
        return out

    listed = [vec(0), vec(2), vec(4), vec(6), vec(1, 3), vec(3, 5), vec(5, 7)]
    assert lattice_index(lattice.basis, listed) == 1


def test_transitive_lattice_is_trivial_plus_regular():
    es = standard_group("ES7")
    tab = dixon_character_table(es)
    lattice = stable_character_basis(tab, full_merge(fusion_of_self(es, 7)))
    assert lattice.rank == 2
    triv = [0] * tab.k
    triv[tab.chars.index(next(c for c in tab.chars
                              if all(v == 1 for v in c.values)))] = 1
    reg_minus = [d for d in tab.degrees()]
    reg_minus[triv.index(1)] -= 1
    assert lattice_index(lattice.basis, [triv, reg_minus]) == 1


def test_decomposition_identity_when_g_is_s():
    s = standard_group("D16")
    tab = dixon_character_table(s)
    lattice = stable_character_basis(tab, fusion_of_self(s, 2))
    dec = decomposition_matrix(tab, s, lattice)
    assert not dec.outside_rows
    assert sorted(dec.d_matrix) == sorted(
        [[1 if i == j else 0 for j in range(tab.k)] for i in range(tab.k)])
    assert abs(dec.det_c) == 1


def test_decomposition_gram_coprime_to_p():
    for name, p in (("S4", 2), ("S5", 2), ("A4", 2), ("GL2_3", 3)):
        g = standard_group(name)
        s = sylow_subgroup(g, p)
        fusion = fusion_from_group(g, s, p)
        tab_s = dixon_character_table(s)
        lattice = stable_character_basis(tab_s, fusion)
        dec = decomposition_matrix(dixon_character_table(g), s, lattice)
        assert gcd(abs(dec.det_c), p) == 1
        assert not dec.outside_rows


def test_indecomposables_c8():
    _, _, tab, lattice = c8_merged_lattice()
    ind, complete = indecomposables_bounded(lattice, 2)
    assert complete and len(ind) == 8
    degrees = [sum(v * d for v, d in zip(vec, tab.degrees())) for vec in ind]
    assert sorted(degrees) == [1, 1, 1, 1, 2, 2, 2, 2]
    assert not factoriality_check(lattice, ind)  # 8 > k = 7


def normal_sylow_ind_case(g, p):
    s = sylow_subgroup(g, p)
    fusion = fusion_from_group(g, s, p)
    tab_s = dixon_character_table(s)
    lattice = stable_character_basis(tab_s, fusion)
    tab_g = dixon_character_table(g)
    restricted, _ = restrict_table(tab_g, s)
    coords = {tuple(irr_coordinates(chi, tab_s)) for chi in restricted}
    bound = max(chi.degree_int() for chi in restricted)
    ind, complete = indecomposables_bounded(lattice, bound)
    assert complete
    return coords, set(ind), lattice


def test_normal_sylow_indecomposables_are_restrictions():
    for name, p in (("S3", 3), ("A4", 2), ("D10", 5), ("D18", 3)):
        g = standard_group(name)
        coords, ind, lattice = normal_sylow_ind_case(g, p)
        assert ind == coords
        assert factoriality_check(lattice, sorted(ind))


def test_normal_sylow_with_multiplicity_two_restriction():
    # D24 over C3 has a degree-2 character trivial on the Sylow, so its
    # restriction 2*1_S is a decomposable member of the restriction set;
    # the indecomposables still number k(F) and sit inside the restrictions.
    coords, ind, lattice = normal_sylow_ind_case(standard_group("D24"), 3)
    assert ind < coords
    assert len(ind) == lattice.fusion.k
    assert factoriality_check(lattice, sorted(ind))


def test_genuine_enumeration_flags_incomplete():
    _, _, tab, lattice = c8_merged_lattice()
    found, complete = genuine_stable_characters(lattice, 3, cap=5)
    assert not complete
