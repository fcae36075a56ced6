"""Lattices spanned by A2 configurations and the 3-divisibility obstruction.

A configuration of type A2 is a pair of (-2)-curves E, E' with E.E' = 1.
``p`` disjoint configurations span a rank-2p lattice whose Gram matrix is
block diagonal with blocks [[-2, 1], [1, -2]].
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .algebra import F3, Matrix, det_exact, det_mod3, format_rational

A2_BLOCK = ((-2, 1), (1, -2))


class BasisKind(str, enum.Enum):
    E_EPRIME = "E-Eprime"
    E_F = "E-F"
    E_EPRIME_H = "E-Eprime-H"
    LEMMA3_BLOCK = "lemma3-block"


class SurfaceType(str, enum.Enum):
    K3 = "K3"
    TORUS = "Torus"
    NOT_REALIZABLE = "NotRealizable"


class PatternViolation(ValueError):
    """A matrix does not have the mod-3 block pattern of the obstruction."""

    def __init__(self, message: str, entries: list[tuple[int, int, int]]) -> None:
        super().__init__(message)
        self.entries = entries


@dataclass(frozen=True)
class GramLattice:
    basis_labels: tuple[str, ...]
    gram: Matrix
    basis_kind: BasisKind

    def __post_init__(self) -> None:
        if not self.gram.is_square or self.gram.rows != len(self.basis_labels):
            raise ValueError("Gram matrix size must equal the number of basis labels")
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        if self.basis_kind is BasisKind.E_EPRIME:
            _check_a2_blocks(self.gram)

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @property
    def pairs(self) -> int:
        if self.basis_kind is BasisKind.E_EPRIME_H:
            return (self.rank - 1) // 2
        return self.rank // 2

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def pair(self, u: Sequence, v: Sequence):
        """Intersection number of two coefficient vectors."""
        return sum(a * b for a, b in zip(u, self.gram @ tuple(v)))

    def determinant(self) -> int:
        return det_exact(self.gram)

    def report(self) -> dict:
        return {
            "basis_kind": self.basis_kind.value,
            "basis_labels": list(self.basis_labels),
            "gram": [list(r) for r in self.gram.tolist()],
            "determinant": self.determinant(),
        }


def _check_a2_blocks(gram: Matrix) -> None:
    n = gram.rows
    for i in range(n):
        for j in range(n):
            if i // 2 == j // 2:
                want = A2_BLOCK[i % 2][j % 2]
            else:
                want = 0
            if gram[i, j] != want:
                raise ValueError(f"entry ({i}, {j}) = {gram[i, j]} breaks the A2 block pattern")


@dataclass(frozen=True)
class RationalClass:
    """A class with rational coefficients over the basis of ``basis``."""

    basis: GramLattice
    coeffs: tuple[Fraction, ...] = field()

    def __post_init__(self) -> None:
        coeffs = tuple(c if type(c) is Fraction else Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.basis.rank:
            raise ValueError(f"expected {self.basis.rank} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: RationalClass) -> RationalClass:
        self._same_basis(other)
        return RationalClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RationalClass) -> RationalClass:
        self._same_basis(other)
        return RationalClass(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, k) -> RationalClass:
        return RationalClass(self.basis, tuple(c * k for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, k) -> RationalClass:
        return RationalClass(self.basis, tuple(c / k for c in self.coeffs))

    def _same_basis(self, other: RationalClass) -> None:
        if other.basis != self.basis:
            raise ValueError("classes are expressed in different bases")

    def dot(self, other: RationalClass | Sequence) -> Fraction:
        v = other.coeffs if isinstance(other, RationalClass) else tuple(other)
        return Fraction(self.basis.pair(self.coeffs, v))

    def pairing_with_basis(self, label: str) -> Fraction:
        e = [0] * self.basis.rank
        e[self.basis.index(label)] = 1
        return self.dot(e)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, label: str) -> Fraction:
        return self.coeffs[self.basis.index(label)]

    def serialize(self) -> dict[str, str]:
        return {lab: format_rational(c) for lab, c in zip(self.basis.basis_labels, self.coeffs)}


def e_labels(p: int) -> tuple[str, ...]:
    return tuple(lab for i in range(1, p + 1) for lab in (f"E{i}", f"E{i}'"))


def f_labels(p: int) -> tuple[str, ...]:
    return tuple(lab for i in range(1, p + 1) for lab in (f"E{i}", f"F{i}"))


@lru_cache(maxsize=None)
def build_cusp_lattice(p: int) -> GramLattice:
    """Lattice spanned by ``p`` disjoint A2 configurations, basis E1, E1', E2, ..."""
    if p < 1:
        raise ValueError("need at least one A2 configuration")
    gram = Matrix.block_diagonal([Matrix.from_rows(A2_BLOCK)] * p)
    return GramLattice(e_labels(p), gram, BasisKind.E_EPRIME)


@lru_cache(maxsize=None)
def ef_transform(p: int) -> Matrix:
    """Rows give E_i and F_i = 2 E_i + E_i' in the E/E' basis."""
    return Matrix.block_diagonal([Matrix.from_rows(((1, 0), (2, 1)))] * p)


@lru_cache(maxsize=None)
def ef_inverse_transform(p: int) -> Matrix:
    """Rows give E_i and E_i' = F_i - 2 E_i in the E/F basis."""
    return Matrix.block_diagonal([Matrix.from_rows(((1, 0), (-2, 1)))] * p)


@lru_cache(maxsize=None)
def ef_base_change(lattice: GramLattice) -> GramLattice:
    """Rewrite the Gram matrix in the basis E_i, F_i := 2 E_i + E_i'."""
    if lattice.basis_kind is not BasisKind.E_EPRIME:
        raise ValueError(f"expected an {BasisKind.E_EPRIME.value} basis, got {lattice.basis_kind.value}")
    p = lattice.pairs
    b = ef_transform(p)
    return GramLattice(f_labels(p), b @ lattice.gram @ b.T, BasisKind.E_F)


@lru_cache(maxsize=None)
def fe_base_change(lattice: GramLattice) -> GramLattice:
    """Inverse of :func:`ef_base_change`."""
    if lattice.basis_kind is not BasisKind.E_F:
        raise ValueError(f"expected an {BasisKind.E_F.value} basis, got {lattice.basis_kind.value}")
    p = lattice.pairs
    b = ef_inverse_transform(p)
    return GramLattice(e_labels(p), b @ lattice.gram @ b.T, BasisKind.E_EPRIME)


@lru_cache(maxsize=None)
def _transpose(m: Matrix) -> Matrix:
    return m.T


def to_e_basis(c: RationalClass) -> RationalClass:
    """Express an E/F class in the E/E' basis (coefficients transform by B^T)."""
    if c.basis.basis_kind is not BasisKind.E_F:
        raise ValueError("class is not over an E-F basis")
    p = c.basis.pairs
    coeffs = _transpose(ef_transform(p)) @ c.coeffs
    return RationalClass(build_cusp_lattice(p), coeffs)


def to_f_basis(c: RationalClass) -> RationalClass:
    if c.basis.basis_kind is not BasisKind.E_EPRIME:
        raise ValueError("class is not over an E-Eprime basis")
    p = c.basis.pairs
    coeffs = _transpose(ef_inverse_transform(p)) @ c.coeffs
    return RationalClass(ef_base_change(c.basis), coeffs)


def admissible_multiplicities(a: int, a_prime: int) -> bool:
    """Can ``a E + a' E'`` be part of a 3-divisible branch divisor?

    Both intersection numbers with E and E' must vanish mod 3.
    """
    if a not in (1, 2) or a_prime not in (1, 2):
        raise ValueError("multiplicities must be 1 or 2")
    return (-2 * a + a_prime) % 3 == 0 and (a - 2 * a_prime) % 3 == 0


@dataclass(frozen=True)
class MultiplicityPattern:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for a, ap in self.pairs:
            if a not in (1, 2) or ap not in (1, 2):
                raise ValueError(f"multiplicities must be 1 or 2, got {(a, ap)}")

    def is_valid(self) -> bool:
        return all(a != ap for a, ap in self.pairs)


def lemma2_pairings(c: RationalClass) -> list[tuple[Fraction, Fraction]]:
    """Pairings of an E/F class with each E_k and E_k'."""
    lat = c.basis
    if lat.basis_kind is not BasisKind.E_F:
        raise ValueError("lemma2 membership is defined over the E-F basis")
    # pair in integers over a common denominator
    den = lcm(*(x.denominator for x in c.coeffs))
    g = lat.gram @ tuple(int(x * den) for x in c.coeffs)
    # E_k' = F_k - 2 E_k
    return [(Fraction(g[2 * k], den), Fraction(g[2 * k + 1] - 2 * g[2 * k], den)) for k in range(lat.pairs)]


def lemma2_membership(c: RationalClass) -> bool:
    """True iff the class pairs integrally with every E_k and E_k'."""
    return all(a.denominator == 1 and b.denominator == 1 for a, b in lemma2_pairings(c))


def euler_triple_cover(p: int) -> tuple[int, SurfaceType]:
    """Euler number of a triple cover of a K3 with ``p`` cusps, branched at the cusps.

    e(Y) = 3 e(Xbar) - 2p with e(Xbar) = 24 - 2p.
    """
    if p < 0:
        raise ValueError("number of cusps must be non-negative")
    e_xbar = 24 - 2 * p
    euler = 3 * e_xbar - 2 * p
    if euler == 24:
        kind = SurfaceType.K3
    elif euler == 0:
        kind = SurfaceType.TORUS
    else:
        kind = SurfaceType.NOT_REALIZABLE
    return euler, kind


# -- the 22 x 22 obstruction -------------------------------------------------

LEMMA3_SIZE = 22
N_F = 7
N_E = 9
F_SLICE = slice(0, N_F)
E_SLICE = slice(N_F, N_F + N_E)
LEMMA3_LABELS = tuple(
    [f"f{i}" for i in range(3, 10)]
    + [f"e{i}" for i in range(1, 10)]
    + ["q1", "q2"]
    + [f"t{i}" for i in range(19, 23)]
)


def pattern_violations(gram: Matrix) -> list[tuple[int, int, int]]:
    """Entries of the f.f and f.e blocks (upper triangle only) not divisible by 3."""
    bad = []
    for i in range(N_F):
        for j in range(i, N_F + N_E):
            if gram[i, j] % 3:
                bad.append((i, j, gram[i, j]))
    return bad


def check_pattern(gram: Matrix) -> None:
    if gram.rows != LEMMA3_SIZE or gram.cols != LEMMA3_SIZE:
        raise PatternViolation(f"expected a {LEMMA3_SIZE}x{LEMMA3_SIZE} matrix", [])
    if not gram.is_symmetric():
        raise PatternViolation("matrix is not symmetric", [])
    bad = pattern_violations(gram)
    if bad:
        raise PatternViolation(f"{len(bad)} f-block entries not divisible by 3", bad)


def lemma3_block_matrix(
    seed: int,
    e_block: Sequence[Sequence[int]] | None = None,
    *,
    ff_block: Sequence[Sequence[int]] | None = None,
    fe_block: Sequence[Sequence[int]] | None = None,
    bound: int = 100,
) -> GramLattice:
    """A random symmetric 22x22 matrix with the divisibility pattern of the obstruction.

    Basis order is f3..f9, e1..e9, q1, q2, t19..t22. The f.f and f.e blocks
    have entries divisible by 3; everything else is drawn from ``seed`` in
    [-bound, bound] unless supplied.
    """
    rng = random.Random(seed)
    n = LEMMA3_SIZE
    m = [[0] * n for _ in range(n)]

    def mult3() -> int:
        return 3 * rng.randint(-(bound // 3), bound // 3)

    for i in range(n):
        for j in range(i, n):
            if i < N_F and j < N_F + N_E:
                v = mult3()
            else:
                v = rng.randint(-bound, bound)
            m[i][j] = m[j][i] = v

    if e_block is not None:
        eb = Matrix.from_rows(e_block)
        if eb.rows != N_E or eb.cols != N_E or not eb.is_symmetric():
            raise ValueError("e_block must be a symmetric 9x9 integer matrix")
        for i in range(N_E):
            for j in range(N_E):
                m[N_F + i][N_F + j] = eb[i, j]
    if ff_block is not None:
        for i in range(N_F):
            for j in range(N_F):
                m[i][j] = ff_block[i][j]
    if fe_block is not None:
        for i in range(N_F):
            for j in range(N_E):
                m[i][N_F + j] = m[N_F + j][i] = fe_block[i][j]

    gram = Matrix.from_rows(m)
    if not gram.is_symmetric():
        raise ValueError("supplied blocks break symmetry")
    return GramLattice(LEMMA3_LABELS, gram, BasisKind.LEMMA3_BLOCK)


def structured_lemma3_matrix(seed: int) -> GramLattice:
    """Pattern matrix whose f-rows are honest combinations of the F_i.

    f_{k} = F_k for k = 3..9, so f.f = -6 delta and f.e = -3 delta.
    """
    ff = [[-6 if i == j else 0 for j in range(N_F)] for i in range(N_F)]
    fe = [[-3 if j == i + 2 else 0 for j in range(N_E)] for i in range(N_F)]
    e = [[-2 if i == j else 0 for j in range(N_E)] for i in range(N_E)]
    return lemma3_block_matrix(seed, e, ff_block=ff, fe_block=fe)


def violate_pattern(lattice: GramLattice, seed: int) -> GramLattice:
    """Copy of a pattern matrix with exactly one f-block entry (and its mirror) off by 1 mod 3."""
    rng = random.Random(seed)
    i = rng.randrange(N_F)
    j = rng.randrange(N_F + N_E)
    m = lattice.gram.tolist()
    m[i][j] += rng.choice((1, 2))
    m[j][i] = m[i][j]
    return GramLattice(lattice.basis_labels, Matrix.from_rows(m), BasisKind.LEMMA3_BLOCK)


def lemma3_determinant_check(lattice: GramLattice) -> F3:
    """Determinant mod 3 of a pattern matrix; always 0.

    Raises :class:`PatternViolation` when the matrix does not carry the
    pattern, since then nothing is claimed.
    """
    check_pattern(lattice.gram)
    return det_mod3(lattice.gram)


def unit_support_matching(gram: Matrix) -> int:
    """Size of a maximum matching in the bipartite graph of entries that are units mod 3.

    Every Leibniz term of det is a perfect matching of this graph, so a
    deficient matching forces det = 0 mod 3 term by term.
    """
    mask = np.array([[x % 3 != 0 for x in gram.row(i)] for i in range(gram.rows)], dtype=np.int8)
    match = maximum_bipartite_matching(csr_matrix(mask), perm_type="column")
    return int((match >= 0).sum())


def leibniz_zero_forced(lattice: GramLattice) -> bool:
    """Structural form of the obstruction: no Leibniz term avoids a multiple of 3.

    The seven f-rows can only use the six columns q1, q2, t19..t22 without
    hitting a multiple of 3, so by Hall's condition no perfect matching of
    unit entries exists.
    """
    check_pattern(lattice.gram)
    return unit_support_matching(lattice.gram) < lattice.rank
