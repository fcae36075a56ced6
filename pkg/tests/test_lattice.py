import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspkit import lattice as lt
from cuspkit.algebra import Matrix, det_exact, det_mod3


@pytest.mark.parametrize("p", [1, 2, 6, 9])
def test_cusp_lattice_determinant(p):
    lat = lt.build_cusp_lattice(p)
    assert lat.rank == 2 * p
    assert lat.determinant() == 3 ** p
    assert round(np.linalg.det(np.array(lat.gram.tolist(), dtype=float))) == 3 ** p
    assert lt.ef_base_change(lat).determinant() == 3 ** p


def test_ef_gram_block():
    ef = lt.ef_base_change(lt.build_cusp_lattice(1))
    assert ef.gram.tolist() == [[-2, -3], [-3, -6]]
    assert ef.basis_labels == ("E1", "F1")


@pytest.mark.parametrize("p", [1, 2, 5])
def test_base_change_round_trip(p):
    lat = lt.build_cusp_lattice(p)
    assert lt.fe_base_change(lt.ef_base_change(lat)).gram == lat.gram


def test_base_change_wrong_kind():
    with pytest.raises(ValueError):
        lt.fe_base_change(lt.build_cusp_lattice(2))
    with pytest.raises(ValueError):
        lt.build_cusp_lattice(0)


@settings(max_examples=40)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=4, max_size=4))
def test_class_coordinates_round_trip(coeffs):
    lat = lt.build_cusp_lattice(2)
    c = lt.RationalClass(lat, coeffs)
    f = lt.to_f_basis(c)
    assert lt.to_e_basis(f).coeffs == c.coeffs
    # the intersection form is basis independent
    assert f.dot(f) == c.dot(c)


def test_lemma2_membership_counts_discriminant_group():
    # classes with coefficients in (1/3)Z modulo the lattice that pair integrally
    lat = lt.ef_base_change(lt.build_cusp_lattice(2))
    grid = [Fraction(k, 3) for k in range(3)]
    members = sum(1 for cs in itertools.product(grid, repeat=4)
                  if lt.lemma2_membership(lt.RationalClass(lat, cs)))
    assert members == lat.determinant() == 9


def test_lemma2_requires_ef_basis():
    with pytest.raises(ValueError):
        lt.lemma2_pairings(lt.RationalClass(lt.build_cusp_lattice(1), [0, 0]))


def test_multiplicity_gate_exhaustive():
    table = {(a, b): lt.admissible_multiplicities(a, b) for a in (1, 2) for b in (1, 2)}
    assert table == {(1, 1): False, (1, 2): True, (2, 1): True, (2, 2): False}
    with pytest.raises(ValueError):
        lt.admissible_multiplicities(0, 1)
    assert lt.MultiplicityPattern(((1, 2), (2, 1))).is_valid()
    assert not lt.MultiplicityPattern(((1, 1),)).is_valid()


@pytest.mark.parametrize("p,euler,kind", [(6, 24, lt.SurfaceType.K3), (9, 0, lt.SurfaceType.TORUS),
                                          (3, 48, lt.SurfaceType.NOT_REALIZABLE)])
def test_euler_triple_cover(p, euler, kind):
    assert lt.euler_triple_cover(p) == (euler, kind)


def test_lemma3_matrix_has_pattern():
    lat = lt.lemma3_block_matrix(0)
    assert lat.rank == 22
    assert lt.pattern_violations(lat.gram) == []
    lt.check_pattern(lat.gram)


@pytest.mark.parametrize("seed", range(25))
def test_lemma3_det_vanishes_mod_3(seed):
    lat = lt.lemma3_block_matrix(seed)
    assert lt.lemma3_determinant_check(lat) == 0
    assert det_exact(lat.gram) % 3 == 0
    assert lt.leibniz_zero_forced(lat)


def test_structured_lemma3_matrix():
    lat = lt.structured_lemma3_matrix(3)
    assert lat.gram[0, 0] == -6 and lat.gram[0, 9] == -3
    assert lt.lemma3_determinant_check(lat) == 0


def test_violated_pattern_is_rejected_and_sometimes_unimodular_mod_3():
    bad = lt.violate_pattern(lt.lemma3_block_matrix(1), 1)
    with pytest.raises(lt.PatternViolation) as info:
        lt.lemma3_determinant_check(bad)
    assert len(info.value.entries) == 1
    nonzero = sum(1 for s in range(100)
                  if det_mod3(lt.violate_pattern(lt.lemma3_block_matrix(s), s).gram) != 0)
    assert nonzero >= 1


def test_e_block_validation():
    with pytest.raises(ValueError):
        lt.lemma3_block_matrix(0, [[1, 2], [2, 1]])


def test_full_rank_matching_without_pattern():
    m = Matrix.identity(22)
    assert lt.unit_support_matching(m) == 22
