"""Acceptance suite: one test per criterion, each with its runtime budget.

Run with ``pytest tests/test_acceptance.py -v``; a pass/fail line per
criterion is printed in the terminal summary.
"""
import time
from collections import Counter
from fractions import Fraction

import pytest

from cuspkit import hesse as hg
from cuspkit import lattice as lt
from cuspkit import ternary as tc
from cuspkit.algebra import det_mod3


def _timed(fn, *args, repeat=1):
    best = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return out, best


@pytest.mark.criterion(1, "Euler classification")
def test_criterion_1_euler_classification(record_property):
    (six, nine), dt = _timed(lambda: (lt.euler_triple_cover(6), lt.euler_triple_cover(9)), repeat=5)
    assert six == (24, lt.SurfaceType.K3)
    assert nine == (0, lt.SurfaceType.TORUS)
    for p in range(0, 12):
        assert lt.euler_triple_cover(p)[0] == 72 - 8 * p
    record_property("budget_seconds", dt)
    assert dt < 1e-3


@pytest.mark.criterion(2, "Multiplicity gate")
def test_criterion_2_multiplicity_gate(record_property):
    def gate():
        return {(a, b) for a in (1, 2) for b in (1, 2) if lt.admissible_multiplicities(a, b)}
    accepted, dt = _timed(gate, repeat=5)
    assert accepted == {(1, 2), (2, 1)}
    record_property("budget_seconds", dt)
    assert dt < 1e-3


@pytest.mark.criterion(3, "Lattice determinants")
def test_criterion_3_lattice_determinants(record_property):
    def dets():
        lat = lt.build_cusp_lattice(9)
        return lat.determinant(), lt.ef_base_change(lat).determinant()
    (d, d_ef), dt = _timed(dets)
    assert d == 3 ** 9 == 19683
    assert d_ef == 19683
    record_property("budget_seconds", dt)
    assert dt < 1.0


@pytest.mark.criterion(4, "Lemma 3 determinant property")
def test_criterion_4_lemma3_property(record_property):
    def sweep():
        rng_seeds = range(1000)
        zeros = sum(1 for s in rng_seeds if lt.lemma3_determinant_check(lt.lemma3_block_matrix(s)) == 0)
        nonzero = 0
        for s in range(100):
            bad = lt.violate_pattern(lt.lemma3_block_matrix(10_000 + s), s)
            if det_mod3(bad.gram) != 0:
                nonzero += 1
        return zeros, nonzero
    (zeros, nonzero), dt = _timed(sweep)
    assert zeros == 1000
    assert nonzero >= 1
    record_property("budget_seconds", dt)
    assert dt < 60.0


@pytest.mark.criterion(5, "Code enumeration")
def test_criterion_5_code_enumeration(enumeration, record_property):
    t = time.perf_counter()
    e = enumeration.result
    assert e.stats.max_dimension == 3
    enumerators, lines, classes, w9 = Counter(), Counter(), Counter(), 0
    for code in enumeration.codes:
        assert code.dimension == 3
        enumerators[tuple(sorted(code.weight_enumerator().items()))] += 1
        inc = tc.lines_of(code)
        lines[len(inc.lines)] += 1
        assert all(len(inc.lines_through(pt)) == 4 for pt in range(1, 10))
        classes[tuple(sorted(len(c) for c in inc.parallel_classes))] += 1
        if tc.weight(tc.find_weight9(code)) == 9:
            w9 += 1
    n = len(e)
    assert enumerators == Counter({((0, 1), (6, 24), (9, 2)): n})
    assert lines == Counter({12: n})
    assert classes == Counter({(3, 3, 3, 3): n})
    assert w9 == n
    assert e.orbit_count == 1
    forms = {tc.monomial_canonical_form(tc.TernaryCode(tc._key_rows(k))) for k in e.representatives}
    assert len(forms) == 1
    total = enumeration.elapsed + (time.perf_counter() - t)
    record_property("budget_seconds", total)
    assert total < 600.0


@pytest.mark.criterion(6, "Divisor construction")
def test_criterion_6_divisor_construction(enumeration, record_property):
    words = {w for code in enumeration.codes for w in code.words_of_weight(9)}
    lattice = lt.ef_base_change(lt.build_cusp_lattice(9))

    def check():
        bad = []
        for w in words:
            D, B = tc.divisor_from_word(w, lattice)
            pairs = tc.multiplicity_pairs(B)
            ok = (all(a in (1, 2) and b in (1, 2) and a != b for a, b in pairs)
                  and B.is_integral()
                  and lt.lemma2_membership(lt.to_f_basis(B / 3))
                  and lt.lemma2_membership(D))
            if not ok:
                bad.append(w)
        return bad
    bad, dt = _timed(check)
    assert bad == []
    record_property("budget_seconds", dt)
    assert dt < 1.0


@pytest.mark.criterion(7, "Hesse geometry at lambda = 2")
def test_criterion_7_hesse_geometry(record_property):
    def run():
        c = hg.HesseCubic(2)
        pts = hg.flexes(c)
        assert len(set(pts)) == 9
        for p in pts:
            assert c.contains(p) and c.hessian_det(p) == 0
        for k in range(3):
            assert hg.inflectional_tangent(c, pts[k]) == hg.tangent_formula(2, 0, k)
            assert hg.inflectional_tangent(c, pts[3 + k]) == hg.tangent_formula(2, 1, k)
        conic = hg.standard_conic(2)
        residuals = [conic.evaluate(q.coords) for q in hg.pair_tangent_points(c, hg.standard_pair())]
        assert residuals == [0] * 6
        for lam in (Fraction(1), Fraction(3), Fraction(-2), Fraction(1, 2)):
            cc = hg.HesseCubic(lam)
            con = hg.standard_conic(lam)
            assert all(con.evaluate(q.coords) == 0 for q in hg.pair_tangent_points(cc, hg.standard_pair()))
            assert hg.conic_tangency_check(cc)
    _, dt = _timed(run)
    record_property("budget_seconds", dt)
    assert dt < 10.0


@pytest.mark.criterion(8, "Dual sextic at lambda = 2")
def test_criterion_8_dual_sextic(record_property):
    def run():
        c = hg.HesseCubic(2)
        dual = hg.dual_sextic(c)
        kinds = [hg.classify_point(dual.poly, q).kind for q in hg.dual_flex_points(c)]
        inter = hg.conic_cusp_intersection(dual.poly, hg.standard_conic(2),
                                           hg.pair_tangent_points(c, hg.standard_pair()))
        return dual, kinds, inter
    (dual, kinds, inter), dt = _timed(run)
    assert dual.degree == 6
    assert kinds == [hg.PointType.A2] * 9
    assert [x.multiplicity for x in inter.contacts] == [2] * 6
    assert inter.total == 12
    assert inter.pullback_degree == 12
    assert all(x.transversal for x in inter.contacts)
    record_property("budget_seconds", dt)
    assert dt < 300.0


@pytest.mark.criterion(9, "Class solve for R - R'")
def test_criterion_9_class_solve(enumeration, record_property):
    def run():
        sol = hg.solve_rr_class()
        word = tc.TernaryWord(hg.six_cusp_word())
        return sol, word
    (sol, word), dt = _timed(run)
    third = Fraction(1, 3)
    assert sol.n_primed == (third,) * 6 + (0,) * 3
    assert sol.n_unprimed == (-third,) * 6 + (0,) * 3
    assert sol.n == 0
    assert sol.checks["lemma2_first_pattern"] and sol.checks["first_pattern_3_divisible"]
    assert sol.ok
    assert str(word) == "111111000"
    code = tc.TernaryCode.spanned_by([word])
    assert tc.is_admissible(code) and tc.claim1_overlaps(code)
    assert sum(1 for c in enumeration.codes if word in c) == 960
    record_property("budget_seconds", dt)
    assert dt < 1.0
