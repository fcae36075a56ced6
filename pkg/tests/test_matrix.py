import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspkit.algebra import (Eisenstein, Matrix, Poly, ShapeError, SingularMatrixError, det_exact,
                               det_mod3, nullspace, rank, solve_exact)


def leibniz(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i) if perm[j] > perm[i])
        term = 1
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + (-term if inversions % 2 else term)
    return total


def square(n, elements):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)


small_ints = st.integers(-20, 20)


@given(st.integers(1, 5).flatmap(lambda n: square(n, small_ints)))
def test_integer_det_matches_leibniz(rows):
    assert det_exact(rows) == leibniz(rows)


@given(st.integers(1, 4).flatmap(lambda n: square(n, st.fractions(min_value=-50, max_value=50, max_denominator=9))))
def test_rational_det_matches_leibniz(rows):
    assert det_exact(rows) == leibniz(rows)


@given(st.integers(1, 4).flatmap(lambda n: square(n, st.builds(Eisenstein, small_ints, small_ints))))
def test_eisenstein_det_matches_leibniz(rows):
    assert det_exact(rows) == leibniz(rows)


@given(st.integers(1, 7).flatmap(lambda n: square(n, small_ints)))
def test_det_mod3_agrees_with_exact(rows):
    assert det_mod3(rows) == det_exact(rows) % 3


def test_large_integer_det_against_float():
    rng = np.random.default_rng(5)
    a = rng.integers(-5, 6, size=(12, 12))
    exact = det_exact(a.tolist())
    assert abs(exact - np.linalg.det(a)) <= 1e-6 * max(1, abs(exact))


def test_polynomial_det():
    x, y = Poly.gens(2)
    m = Matrix.from_rows([[x, y, 1], [y, x, 0], [1, 0, x]])
    assert det_exact(m) == leibniz(m.tolist())


def test_det_shape_errors():
    with pytest.raises(ShapeError):
        det_exact(Matrix.from_rows([[1, 2, 3]]))
    with pytest.raises(TypeError):
        det_mod3([[Fraction(1, 2)]])


@settings(max_examples=50)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(square(n, small_ints), st.lists(small_ints, min_size=n, max_size=n))))
def test_solve_resubstitutes(data):
    rows, rhs = data
    if det_exact(rows) == 0:
        with pytest.raises(SingularMatrixError):
            solve_exact(rows, rhs)
        return
    x = solve_exact(rows, rhs)
    assert Matrix.from_rows(rows) @ x == tuple(rhs)


def test_nullspace_and_rank():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    kernel = nullspace(m)
    assert len(kernel) == 1
    assert m @ kernel[0] == (0, 0, 0)
    assert rank(m) == 2
    assert rank(Matrix.identity(4)) == 4


def test_matrix_basics():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.T.tolist() == [[1, 3], [2, 4]]
    assert (m @ Matrix.identity(2)) == m
    assert Matrix.block_diagonal([m, Matrix.identity(1)]).rows == 3
    assert not m.is_symmetric()
    with pytest.raises(ShapeError):
        Matrix.from_rows([[1], [1, 2]])
    with pytest.raises(AttributeError):
        m.rows = 5
