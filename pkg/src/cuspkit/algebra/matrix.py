"""Dense exact matrices and the linear algebra the rest of the package needs."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .scalars import F3, format_scalar


class ShapeError(ValueError):
    """Matrix dimensions do not fit the operation."""


class SingularMatrixError(ArithmeticError):
    """The matrix has no inverse over its field."""


class Matrix:
    """Immutable dense row-major matrix over an exact scalar type."""

    __slots__ = ("rows", "cols", "entries", "_sparse")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_sparse", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        rows = [tuple(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> Matrix:
        return cls(n, n, (one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def block_diagonal(cls, blocks: Sequence[Matrix], zero=0) -> Matrix:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[zero] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r += b.rows
            c += b.cols
        return cls.from_rows(out)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    T = property(transpose)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def map(self, f: Callable) -> Matrix:
        return Matrix(self.rows, self.cols, map(f, self.entries))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            ot = other.T
            ocols = [ot.row(j) for j in range(other.cols)]
            return Matrix(self.rows, other.cols,
                          (_dot(self.row(i), c) for i in range(self.rows) for c in ocols))
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ShapeError("vector length does not match column count")
        out = []
        for row in self._sparse_rows():
            total = 0
            for j, a in row:
                b = vec[j]
                if b != 0:
                    total = total + a * b
            out.append(total)
        return tuple(out)

    def _sparse_rows(self) -> tuple:
        # nonzero pattern, computed once; lattice Gram matrices are mostly zero
        if self._sparse is None:
            sparse = tuple(tuple((j, x) for j, x in enumerate(self.row(i)) if x != 0) for i in range(self.rows))
            object.__setattr__(self, "_sparse", sparse)
        return self._sparse

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix.from_rows({self.tolist()!r})"

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(x) for x in self.row(i)] for i in range(self.rows)]

    def det(self):
        return det_exact(self)


def _dot(u, v):
    total = 0
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            total = total + a * b
    return total


def as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_rows(m)


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")


def _bareiss(rows: list[list], exact_div: Callable):
    """Fraction-free elimination; works over any integral domain with exact division."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = exact_div(pivot * ri[j] - rik * rk[j], prev)
            ri[k] = 0
        prev = pivot
    d = rows[n - 1][n - 1]
    return d if sign == 1 else -d


def _gauss_det(rows: list[list]):
    n = len(rows)
    det = 1
    for k in range(n):
        p = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if p is None:
            return 0 * rows[0][0]
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        pivot = rows[k][k]
        det = det * pivot
        inv = 1 / pivot
        for i in range(k + 1, n):
            f = rows[i][k]
            if f != 0:
                f = f * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[k])]
    return det


def det_exact(m):
    """Exact determinant.

    Integer and polynomial matrices go through Bareiss elimination, matrices
    over a field (``Fraction``, :class:`Eisenstein`) through Gaussian
    elimination. Nothing is ever rounded.
    """
    m = as_matrix(m)
    _require_square(m)
    rows = m.tolist()
    if all(isinstance(x, int) for x in m.entries):
        return _bareiss(rows, lambda a, b: a // b)
    if any(hasattr(x, "exact_div") for x in m.entries):
        return _bareiss(rows, _poly_exact_div)
    if m.rows == 0:
        return 1
    return _gauss_det(rows)


def _poly_exact_div(a, b):
    if b == 1:
        return a
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    return a / b


def det_mod3(m) -> F3:
    """Determinant of an integer matrix reduced mod 3, by elimination over F3."""
    m = as_matrix(m)
    _require_square(m)
    if not all(isinstance(x, int) for x in m.entries):
        raise TypeError("det_mod3 needs integer entries")
    n = m.rows
    rows = [[x % 3 for x in m.row(i)] for i in range(n)]
    det = 1
    for k in range(n):
        p = next((i for i in range(k, n) if rows[i][k]), None)
        if p is None:
            return F3(0)
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        pivot = rows[k][k]
        det *= pivot
        rk = rows[k]
        # pivot is its own inverse mod 3
        for i in range(k + 1, n):
            f = (rows[i][k] * pivot) % 3
            if f:
                rows[i] = [(a - f * b) % 3 for a, b in zip(rows[i], rk)]
    return F3(det)


def solve_exact(m, rhs: Sequence) -> tuple:
    """Solve ``m @ x == rhs`` exactly over the field of the entries.

    Raises :class:`ShapeError` for mismatched shapes and
    :class:`SingularMatrixError` when ``m`` is not invertible.
    """
    m = as_matrix(m)
    if not m.is_square:
        raise ShapeError(f"solve needs a square matrix, got {m.rows}x{m.cols}")
    rhs = tuple(rhs)
    if len(rhs) != m.rows:
        raise ShapeError("right-hand side length does not match matrix")
    n = m.rows
    aug = [[_lift(x) for x in m.row(i)] + [_lift(rhs[i])] for i in range(n)]
    for k in range(n):
        p = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        aug[k], aug[p] = aug[p], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
    return tuple(aug[i][n] for i in range(n))


def _lift(x):
    return Fraction(x) if isinstance(x, int) else x


def nullspace(m) -> list[tuple]:
    """Basis of the right kernel of ``m`` over its field (reduced echelon)."""
    m = as_matrix(m)
    rows = [[_lift(x) for x in m.row(i)] for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def rank(m) -> int:
    m = as_matrix(m)
    return m.cols - len(nullspace(m))
