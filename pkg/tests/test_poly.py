from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspkit.algebra import (Eisenstein, HomogPoly, Poly, resultant, resultant_eliminate, strip_factor,
                               sylvester_matrix)

X, Y, Z = Poly.gens(3)
T = Poly.gens(1)[0]

roots = st.lists(st.integers(-6, 6), min_size=1, max_size=4)


def from_roots(lead, rs):
    p = Poly.constant(1, lead)
    for r in rs:
        p = p * (T - r)
    return p


@settings(max_examples=60)
@given(roots, roots, st.integers(1, 3), st.integers(1, 3))
def test_resultant_product_formula(ra, rb, la, lb):
    # Res(f, g) = la^n lb^m prod (a_i - b_j)
    f, g = from_roots(la, ra), from_roots(lb, rb)
    expected = la ** len(rb) * lb ** len(ra)
    for a in ra:
        for b in rb:
            expected *= a - b
    assert resultant(f, g, 0) == Poly.constant(1, expected)


def test_resultant_degenerate_cases():
    with pytest.raises(ValueError):
        resultant(Poly.constant(1, 2), Poly.constant(1, 3), 0)
    assert resultant(Poly.constant(1, 2), T ** 3 + 1, 0) == Poly.constant(1, 8)
    assert resultant(Poly(1), T, 0).is_zero()


def test_sylvester_shape():
    f = X ** 2 + Y * X + Z
    g = X ** 3 - Y
    assert sylvester_matrix(f, g, 0).rows == 5


def test_eliminate_common_line():
    # x - y and x^2 - y^2 share the line x = y, so eliminating x kills everything
    f = HomogPoly.from_poly(X - Y)
    g = HomogPoly.from_poly(X * X - Y * Y)
    assert resultant_eliminate(f, g, 0).is_zero()


def test_eliminate_degree_count():
    f = HomogPoly.from_poly(X ** 2 + Y * Z)
    g = HomogPoly.from_poly(X * Y + Z ** 2)
    r = resultant_eliminate(f, g, 0)
    assert r.degree == 4
    assert r.terms.keys() and all(e[0] == 0 for e in r.terms)


polys = st.builds(
    lambda cs: sum((Poly.constant(3, c) * X ** i * Y ** j * Z ** k for (i, j, k), c in cs), Poly(3)),
    st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)),
                       st.integers(-5, 5)), max_size=5))


@settings(max_examples=60)
@given(polys, polys)
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a
    q, r = (a * b + Poly.constant(3, 0)).divmod_by(b)
    assert r.is_zero() and q == a


@settings(max_examples=60)
@given(polys, polys, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_evaluate_is_a_ring_map(a, b, pt):
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt)


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        (X * X + 1).exact_div(X)


def test_strip_factor():
    p = X ** 3 * (Y + Z)
    q, k = strip_factor(p, X)
    assert k == 3 and q == Y + Z


def test_diff_and_compose():
    p = X ** 3 + 3 * X * Y * Z
    assert p.diff(0) == 3 * X ** 2 + 3 * Y * Z
    assert p.compose([Y, X, Z]) == Y ** 3 + 3 * X * Y * Z
    assert p.compose([T, T, T]) == 4 * T ** 3


def test_primitive_normal_form():
    p = Fraction(-2, 3) * X ** 2 + Fraction(4, 9) * Y ** 2
    assert p.primitive() == 3 * X ** 2 - 2 * Y ** 2
    w = Eisenstein(0, 1)
    assert (w * X + Y).primitive() == X + Y * w.inverse()


def test_homog_poly_validation():
    with pytest.raises(ValueError):
        HomogPoly.from_poly(X ** 2 + Y)
    h = HomogPoly.from_poly(X * Y - Z ** 2)
    assert h.degree == 2
    assert h.serialize() == [[[1, 1, 0], "1"], [[0, 0, 2], "-1"]]
    assert h.hessian_at((0, 0, 0)).tolist() == [[0, 1, 0], [1, 0, 0], [0, 0, -2]]
