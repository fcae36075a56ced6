import itertools
import math
import random

import numpy as np
import pytest

from cuspkit import lattice as lt
from cuspkit import ternary as tc

AG = tc.ag23_code()


def brute_words(basis):
    out = set()
    for coeffs in itertools.product(range(3), repeat=len(basis)):
        out.add(tuple(int(x) for x in (np.array(coeffs) @ np.array(basis)) % 3))
    return out


def random_monomial(rng):
    perm = list(range(9))
    rng.shuffle(perm)
    return perm, [rng.choice((1, 2)) for _ in range(9)]


def test_word_basics():
    w = tc.TernaryWord.from_str("111111000")
    assert str(w) == "111111000"
    assert w.weight == 6 and w.support() == frozenset(range(1, 7))
    assert tc.TernaryWord.from_int(int(w)) == w
    assert (w + w + w).weight == 0
    assert (2 * w).normalized() == w
    with pytest.raises(ValueError):
        tc.TernaryWord((1, 2))


def test_code_words_match_brute_force():
    assert {tuple(w) for w in AG.words} == brute_words(AG.basis)
    assert len(AG.words) == 27


def test_affine_code_weight_enumerator():
    counts = {}
    for w in brute_words(AG.basis):
        k = sum(1 for x in w if x)
        counts[k] = counts.get(k, 0) + 1
    assert AG.weight_enumerator() == counts == {0: 1, 6: 24, 9: 2}
    assert tc.is_admissible(AG)
    assert tc.claim1_overlaps(AG)


def test_dependent_generators_rejected():
    with pytest.raises(ValueError):
        tc.TernaryCode([[1] * 9, [2] * 9])


@pytest.mark.parametrize("q7", [0, 1, 2])
def test_five_overlap_is_inadmissible(q7):
    assert tc.overlap_five_contradiction(q7).weight <= 5


def test_lines_form_affine_plane():
    inc = tc.lines_of(AG)
    assert inc.is_affine_plane()
    assert len(inc.lines) == 12
    assert sorted(len(c) for c in inc.parallel_classes) == [3, 3, 3, 3]
    assert tc.incidence_isomorphism(inc, tc.affine_plane_ag23()) is not None


def test_lines_need_dimension_three():
    with pytest.raises(ValueError):
        tc.lines_of(tc.TernaryCode([[1] * 9]))


def test_incidence_isomorphism_rejects_mismatch():
    plane = tc.affine_plane_ag23()
    fewer = tc.LineIncidence.from_lines(plane.lines[:11])
    assert tc.incidence_isomorphism(fewer, plane) is None


def test_weight9_recipe():
    w = tc.find_weight9(AG)
    assert w.weight == 9
    assert w in AG


def test_divisor_multiplicities():
    for text, pair in (("111111111", (2, 1)), ("222222222", (1, 2))):
        D, B = tc.divisor_from_word(tc.TernaryWord.from_str(text))
        assert tc.multiplicity_pairs(B) == [pair] * 9
        assert lt.lemma2_membership(D)
        assert lt.lemma2_membership(lt.to_f_basis(B / 3))


def test_printed_variant_breaks_multiplicities():
    B = tc.divisor_as_printed(tc.TernaryWord.from_str("222222222"))
    assert tc.multiplicity_pairs(B) == [(4, -1)] * 9


def test_divisor_needs_weight_nine():
    with pytest.raises(ValueError):
        tc.divisor_from_word(tc.TernaryWord.from_str("111111000"))


@pytest.mark.parametrize("seed", range(5))
def test_canonical_form_is_monomial_invariant(seed):
    rng = random.Random(seed)
    perm, scale = random_monomial(rng)
    image = AG.transformed(perm, scale)
    assert tc.monomial_canonical_form(image) == tc.monomial_canonical_form(AG)
    assert tc.monomial_isomorphism(AG, image) is not None


def test_canonical_form_separates_inequivalent_codes():
    other = tc.TernaryCode([[1, 1, 1, 1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1, 1, 1, 1], [1, 0, 0, 0, 0, 0, 0, 0, 0]])
    assert tc.monomial_isomorphism(AG, other) is None
    assert tc.monomial_canonical_form(AG) != tc.monomial_canonical_form(other)


def test_monomial_orbit_of_affine_code_size():
    # |monomial group| / |AGL(2,3) x {+-1}|
    expected = math.factorial(9) * 2 ** 9 // (9 * 48 * 2)
    assert len(tc.monomial_orbit(AG.key)) == expected == 215040


def test_enumeration_reduced(enumeration):
    e = enumeration.result
    assert len(e) == 215040
    assert e.orbit_count == 1
    assert AG.key in set(e.keys)
    # double counting: 24 weight-6 words per code over 9C6 * 2^6 weight-6 words in total
    assert len(e.representatives) == 215040 * 24 // (math.comb(9, 6) * 2 ** 6) == 960
    assert all(tc.SEED_WORD in tc.TernaryCode(tc._key_rows(k)) for k in e.representatives)


@pytest.mark.slow
def test_enumeration_full_matches_reduced(enumeration):
    full = tc.enumerate_codes(reduce_symmetry=False)
    assert full.keys == enumeration.result.keys
    assert full.orbit_count == 1
    assert full.stats.dimension_counts[3] == 215040
