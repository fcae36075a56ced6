"""Ternary codes of length nine, their line geometry, and the admissible-code search.

A word is admissible when its weight is 0, 6 or 9; a code is admissible
when every word it spans is. Points are the ciphers 1..9, and a line is the
zero set of a weight-6 word.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .lattice import BasisKind, GramLattice, RationalClass, build_cusp_lattice, ef_base_change, to_e_basis

LENGTH = 9
ADMISSIBLE_WEIGHTS = frozenset({0, 6, 9})
POWERS = np.array([3 ** (LENGTH - 1 - i) for i in range(LENGTH)], dtype=np.int64)


class TernaryWord(tuple):
    """A vector in F3^9; entries are the residues 0, 1, 2."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> TernaryWord:
        vals = tuple(int(x) % 3 for x in entries)
        if len(vals) != LENGTH:
            raise ValueError(f"a word has {LENGTH} entries, got {len(vals)}")
        return super().__new__(cls, vals)

    @classmethod
    def from_str(cls, s: str) -> TernaryWord:
        if len(s) != LENGTH or set(s) - set("012"):
            raise ValueError(f"not a ternary word: {s!r}")
        return cls(int(ch) for ch in s)

    @classmethod
    def from_int(cls, n: int) -> TernaryWord:
        return _word_from_int(n)

    def __int__(self) -> int:
        n = 0
        for x in self:
            n = 3 * n + x
        return n

    def __str__(self) -> str:
        return "".join(map(str, self))

    def __repr__(self) -> str:
        return f"TernaryWord('{self}')"

    def __add__(self, other) -> TernaryWord:
        return TernaryWord(a + b for a, b in zip(self, other))

    def __sub__(self, other) -> TernaryWord:
        return TernaryWord(a - b for a, b in zip(self, other))

    def __neg__(self) -> TernaryWord:
        return TernaryWord(-a for a in self)

    def __mul__(self, k: int) -> TernaryWord:
        return TernaryWord(k * a for a in self)

    __rmul__ = __mul__

    @property
    def weight(self) -> int:
        return weight(self)

    def support(self) -> frozenset[int]:
        """1-based ciphers with a nonzero entry."""
        return frozenset(i + 1 for i, x in enumerate(self) if x)

    def zeros(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self) if not x)

    def normalized(self) -> TernaryWord:
        """Scalar multiple whose first nonzero entry is 1."""
        lead = next((x for x in self if x), 1)
        return self * lead  # lead is its own inverse


@lru_cache(maxsize=None)
def _word_from_int(n: int) -> TernaryWord:
    digits = []
    for _ in range(LENGTH):
        n, r = divmod(n, 3)
        digits.append(r)
    return TernaryWord(reversed(digits))


def weight(w: Sequence[int]) -> int:
    """Number of nonzero entries."""
    return sum(1 for x in w if x % 3)


def overlap(q: Sequence[int], q2: Sequence[int]) -> int:
    """Number of positions where both words are nonzero."""
    return sum(1 for a, b in zip(q, q2) if a % 3 and b % 3)


def _rref(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over F3 with zero rows dropped."""
    m = [list(r) for r in rows]
    out_rows = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(out_rows, len(m)) if m[i][c] % 3), None)
        if p is None:
            continue
        m[out_rows], m[p] = m[p], m[out_rows]
        inv = m[out_rows][c] % 3  # self-inverse
        m[out_rows] = [(x * inv) % 3 for x in m[out_rows]]
        for i in range(len(m)):
            if i != out_rows and m[i][c] % 3:
                f = m[i][c]
                m[i] = [(a - f * b) % 3 for a, b in zip(m[i], m[out_rows])]
        out_rows += 1
        if out_rows == len(m):
            break
    return tuple(tuple(r) for r in m[:out_rows])


def rank_f3(rows: Sequence[Sequence[int]]) -> int:
    return len(_rref(rows)) if rows else 0


class TernaryCode:
    """Linear subspace of F3^9 given by independent generators.

    Equality is equality of the spanned sets.
    """

    __slots__ = ("basis", "__dict__")

    def __init__(self, basis: Iterable[Sequence[int]]) -> None:
        basis = tuple(w if isinstance(w, TernaryWord) else TernaryWord(w) for w in basis)
        if rank_f3(basis) != len(basis):
            raise ValueError("generators are linearly dependent over F3")
        self.basis = basis

    @classmethod
    def from_strings(cls, gens: Iterable[str]) -> TernaryCode:
        return cls(TernaryWord.from_str(s) for s in gens)

    @classmethod
    def spanned_by(cls, words: Iterable[Sequence[int]]) -> TernaryCode:
        """Code spanned by possibly dependent words."""
        words = list(words)
        return cls(_rref(words) if words else ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @cached_property
    def key(self) -> tuple[int, ...]:
        """Canonical key: the reduced echelon basis, words encoded as integers."""
        if not self.basis:
            return ()
        return tuple(int(TernaryWord(r)) for r in _rref(self.basis))

    @cached_property
    def words(self) -> tuple[TernaryWord, ...]:
        """All 3^dim words of the span."""
        out = []
        for coeffs in itertools.product(range(3), repeat=self.dimension):
            v = [0] * LENGTH
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            out.append(TernaryWord(v))
        return tuple(out)

    def __contains__(self, w) -> bool:
        return TernaryWord(w) in set(self.words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TernaryCode):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"TernaryCode.from_strings({self.serialize()!r})"

    def serialize(self) -> list[str]:
        return [str(w) for w in self.basis]

    def weight_enumerator(self) -> dict[int, int]:
        return dict(sorted(Counter(weight(w) for w in self.words).items()))

    def words_of_weight(self, k: int) -> list[TernaryWord]:
        return [w for w in self.words if weight(w) == k]

    def scaled(self, k: int) -> TernaryCode:
        return TernaryCode(w * k for w in self.basis)

    def transformed(self, perm: Sequence[int], scale: Sequence[int] = (1,) * LENGTH) -> TernaryCode:
        """Image under the monomial map sending coordinate i to perm[i], scaled by scale[i]."""
        return TernaryCode(apply_monomial(w, perm, scale) for w in self.basis)


def apply_monomial(w: Sequence[int], perm: Sequence[int], scale: Sequence[int]) -> TernaryWord:
    out = [0] * LENGTH
    for i, x in enumerate(w):
        out[perm[i]] = scale[i] * x
    return TernaryWord(out)


def is_admissible(code: TernaryCode) -> bool:
    """Every spanned word has weight 0, 6 or 9."""
    return all(weight(w) in ADMISSIBLE_WEIGHTS for w in code.words)


def _independent(u: Sequence[int], v: Sequence[int]) -> bool:
    return rank_f3([u, v]) == 2


def claim1_overlaps(code: TernaryCode) -> bool:
    """Independent weight-6 words overlap in exactly 3 or 4 places.

    Also enforces the companion fact that weight-6 words overlapping in all
    six places are dependent.
    """
    six = code.words_of_weight(6)
    for u, v in itertools.combinations(six, 2):
        r = overlap(u, v)
        if _independent(u, v):
            if r not in (3, 4):
                return False
        elif r != 6:
            return False
    return True


def overlap_five_contradiction(q7: int) -> TernaryWord:
    """The word q + 2q' from the five-overlap configuration.

    With q = 111111000 and q' = 0 2 1 1 1 1 q7 0 0, the combination has
    weight at most 5 and so cannot lie in an admissible code.
    """
    q = TernaryWord.from_str("111111000")
    qp = TernaryWord((0, 2, 1, 1, 1, 1, q7, 0, 0))
    return q + 2 * qp


# -- lines ------------------------------------------------------------------

Line = tuple[int, int, int]


@dataclass(frozen=True)
class LineIncidence:
    """Points 1..9 with a family of 3-point lines grouped into parallel classes."""

    lines: tuple[Line, ...]
    parallel_classes: tuple[tuple[Line, ...], ...]

    def __post_init__(self) -> None:
        for a, b in itertools.combinations(self.lines, 2):
            if len(set(a) & set(b)) > 1:
                raise ValueError(f"lines {a} and {b} share more than one point")
        for cls in self.parallel_classes:
            for a, b in itertools.combinations(cls, 2):
                if set(a) & set(b):
                    raise ValueError(f"parallel lines {a} and {b} meet")

    @classmethod
    def from_lines(cls, lines: Iterable[Iterable[int]]) -> LineIncidence:
        lines = tuple(sorted({tuple(sorted(line)) for line in lines}))
        return cls(lines, _parallel_classes(lines))

    def lines_through(self, point: int) -> list[Line]:
        return [line for line in self.lines if point in line]

    def points(self) -> list[int]:
        return sorted({p for line in self.lines for p in line})

    def line_through(self, a: int, b: int) -> Line | None:
        for line in self.lines:
            if a in line and b in line:
                return line
        return None

    def is_affine_plane(self) -> bool:
        """9 points, 12 lines, 4 lines per point, unique line through two points, 4 classes of 3."""
        if len(self.lines) != 12 or self.points() != list(range(1, 10)):
            return False
        if any(len(self.lines_through(p)) != 4 for p in range(1, 10)):
            return False
        for a, b in itertools.combinations(range(1, 10), 2):
            if sum(1 for line in self.lines if a in line and b in line) != 1:
                return False
        return len(self.parallel_classes) == 4 and all(len(c) == 3 for c in self.parallel_classes)

    def serialize(self) -> dict:
        return {
            "lines": [list(line) for line in self.lines],
            "parallel_classes": [[list(line) for line in c] for c in self.parallel_classes],
        }


def _parallel_classes(lines: Sequence[Line]) -> tuple[tuple[Line, ...], ...]:
    # components of the disjointness graph (parallelism is transitive in an affine plane)
    remaining = list(lines)
    classes = []
    while remaining:
        comp = [remaining.pop(0)]
        grew = True
        while grew:
            grew = False
            for line in list(remaining):
                if any(not set(line) & set(c) for c in comp):
                    comp.append(line)
                    remaining.remove(line)
                    grew = True
        classes.append(tuple(sorted(comp)))
    return tuple(sorted(classes))


def lines_of(code: TernaryCode) -> LineIncidence:
    """Zero sets of the weight-6 words of an admissible code of dimension >= 3."""
    if code.dimension < 3:
        raise ValueError("lines are only defined for codes of dimension at least 3")
    if not is_admissible(code):
        raise ValueError("code is not admissible")
    return LineIncidence.from_lines(w.zeros() for w in code.words_of_weight(6))


def affine_plane_ag23() -> LineIncidence:
    """AG(2,3) on ciphers 1..9, cipher i standing for (a, b) = divmod(i - 1, 3)."""
    pts = {(a, b): 3 * a + b + 1 for a in range(3) for b in range(3)}
    lines = set()
    for direction in ((0, 1), (1, 0), (1, 1), (1, 2)):
        for base in pts:
            line = tuple(sorted(pts[((base[0] + t * direction[0]) % 3, (base[1] + t * direction[1]) % 3)]
                                for t in range(3)))
            lines.add(line)
    return LineIncidence.from_lines(lines)


def ag23_code() -> TernaryCode:
    """Affine functions on F3^2: constants plus the two coordinate functions."""
    ones = [1] * LENGTH
    xs = [(i // 3) for i in range(LENGTH)]
    ys = [(i % 3) for i in range(LENGTH)]
    return TernaryCode([ones, xs, ys])


def incidence_isomorphism(a: LineIncidence, b: LineIncidence) -> dict[int, int] | None:
    """A point bijection carrying the lines of ``a`` onto those of ``b``, if any."""
    if len(a.lines) != len(b.lines):
        return None
    pts_a, pts_b = a.points(), b.points()
    if len(pts_a) != len(pts_b):
        return None
    target = set(b.lines)
    lines_a = a.lines

    def consistent(mapping: dict[int, int]) -> bool:
        for line in lines_a:
            if all(p in mapping for p in line):
                if tuple(sorted(mapping[p] for p in line)) not in target:
                    return False
        return True

    def extend(i: int, mapping: dict[int, int], used: set[int]) -> dict[int, int] | None:
        if i == len(pts_a):
            return dict(mapping)
        p = pts_a[i]
        for q in pts_b:
            if q in used:
                continue
            mapping[p] = q
            used.add(q)
            if consistent(mapping):
                found = extend(i + 1, mapping, used)
                if found:
                    return found
            del mapping[p]
            used.discard(q)
        return None

    return extend(0, {}, set())


def find_weight9(code: TernaryCode) -> TernaryWord:
    """Build a weight-9 word from two words vanishing on parallel lines.

    Take a parallel class L, L', L''; words q, q' vanishing on L and L'
    overlap exactly on L''. Rescale q so that it agrees with q' at one point
    of L''; then q - q' has weight 6, forcing agreement on all of L'', and
    q + q' has weight 9.
    """
    inc = lines_of(code)
    cls = next((c for c in inc.parallel_classes if len(c) == 3), None)
    if cls is None:
        raise RuntimeError("no parallel class of three lines")
    L, Lp, Lpp = cls
    six = code.words_of_weight(6)
    q = next(w for w in six if w.zeros() == frozenset(L))
    qp = next(w for w in six if w.zeros() == frozenset(Lp))
    common = q.support() & qp.support()
    if common != frozenset(Lpp):
        raise RuntimeError("words on parallel lines do not overlap in the third line")
    i = min(Lpp) - 1
    if q[i] != qp[i]:
        q = 2 * q
    if weight(q - qp) != 6:
        raise RuntimeError("q - q' is not a weight-6 word")
    w = q + qp
    if weight(w) != 9:
        raise RuntimeError("recipe did not produce a weight-9 word")
    return w


# -- divisors ----------------------------------------------------------------

def divisor_from_word(w: Sequence[int], lattice: GramLattice | None = None) -> tuple[RationalClass, RationalClass]:
    """Branch divisor attached to a weight-9 word.

    Returns ``(D, B)`` where ``D = sum (w_i / 3) F_i`` over the E/F basis and
    ``B = 3D - sum_{w_i = 2} 3 E_i`` over the E/E' basis. Each pair of ``B``
    carries multiplicities (2, 1) or (1, 2), and ``B / 3`` is integral over I.
    """
    w = TernaryWord(w)
    if weight(w) != LENGTH:
        raise ValueError(f"need a weight-9 word, got weight {weight(w)}")
    if lattice is None:
        lattice = ef_base_change(build_cusp_lattice(LENGTH))
    if lattice.basis_kind is not BasisKind.E_F or lattice.rank != 2 * LENGTH:
        raise ValueError("need the rank-18 E-F lattice")
    coeffs = []
    for x in w:
        coeffs += [Fraction(0), Fraction(x, 3)]
    D = RationalClass(lattice, coeffs)
    three_d = to_e_basis(D * 3)
    sub = []
    for x in w:
        sub += [3 if x == 2 else 0, 0]
    B = three_d - RationalClass(three_d.basis, sub)
    return D, B


def divisor_as_printed(w: Sequence[int]) -> RationalClass:
    """``3D - sum_{w_i = 2} 3 E_i'``: subtracts the primed curve instead.

    Kept only to document that this variant gives multiplicities (4, -1).
    """
    D, _ = divisor_from_word(w)
    three_d = to_e_basis(D * 3)
    sub = []
    for x in TernaryWord(w):
        sub += [0, 3 if x == 2 else 0]
    return three_d - RationalClass(three_d.basis, sub)


def multiplicity_pairs(b: RationalClass) -> list[tuple[int, int]]:
    c = b.coeffs
    return [(int(c[2 * i]), int(c[2 * i + 1])) for i in range(len(c) // 2)]


# -- monomial equivalence ------------------------------------------------------

def monomial_isomorphism(c1: TernaryCode, c2: TernaryCode) -> tuple[list[int], list[int]] | None:
    """Find (perm, scale) with ``c1.transformed(perm, scale) == c2`` by backtracking.

    Coordinates of ``c1`` are assigned one at a time; at each depth the
    punctured codes on the assigned coordinates must agree as sets.
    """
    if c1.dimension != c2.dimension:
        return None
    w1, w2 = c1.words, c2.words

    def extend(depth: int, perm: list[int], scale: list[int]):
        if depth == LENGTH:
            return list(perm), list(scale)
        used = set(perm)
        for j in range(LENGTH):
            if j in used:
                continue
            for s in (1, 2):
                perm.append(j)
                scale.append(s)
                left = {tuple((scale[k] * w[k]) % 3 for k in range(depth + 1)) for w in w1}
                right = {tuple(w[perm[k]] for k in range(depth + 1)) for w in w2}
                if left == right:
                    found = extend(depth + 1, perm, scale)
                    if found:
                        return found
                perm.pop()
                scale.pop()
        return None

    return extend(0, [], [])


@lru_cache(maxsize=None)
def _gl3_matrices(k: int) -> np.ndarray:
    mats = []
    for entries in itertools.product(range(3), repeat=k * k):
        m = np.array(entries, dtype=np.int64).reshape(k, k)
        if round(np.linalg.det(m)) % 3:
            mats.append(m)
    return np.array(mats, dtype=np.int64)


def monomial_canonical_form(code: TernaryCode) -> tuple[int, int]:
    """Invariant of a code under coordinate permutation and rescaling.

    The columns of a generator matrix, read as points of PG(k-1, 3), are
    canonical up to GL(k, 3); the form is the least sorted column list over
    the whole group.
    """
    k = code.dimension
    if k == 0:
        return (0, 0)
    g = np.array(code.basis, dtype=np.int64)
    mats = _gl3_matrices(k)
    cols = np.einsum("gij,jc->gci", mats, g) % 3  # (group, column, coord)
    # scale each column so its first nonzero coordinate is 1 (2 is self-inverse)
    nz = cols != 0
    first = np.where(nz.any(axis=2), nz.argmax(axis=2), 0)
    lead = np.take_along_axis(cols, first[..., None], axis=2)[..., 0]
    lead = np.where(lead == 0, 1, lead)
    cols = (cols * lead[..., None]) % 3
    enc = (cols * (3 ** np.arange(k - 1, -1, -1))).sum(axis=2)
    enc.sort(axis=1)
    base = 3 ** k
    flat = (enc * (base ** np.arange(LENGTH - 1, -1, -1, dtype=np.int64))).sum(axis=1)
    return (k, int(flat.min()))


# -- exhaustive search ---------------------------------------------------------

_ALL = np.array(list(itertools.product(range(3), repeat=LENGTH)), dtype=np.int8)
_WEIGHTS = (_ALL != 0).sum(axis=1)
_ADMISSIBLE_MASK = np.isin(_WEIGHTS, list(ADMISSIBLE_WEIGHTS))


def _encode(words: np.ndarray) -> np.ndarray:
    return words.astype(np.int64) @ POWERS


def _compatible(cand: np.ndarray, cand_codes: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Rows v of cand with v + w and v + 2w also in cand."""
    ok = np.ones(len(cand), dtype=bool)
    for t in (1, 2):
        shifted = _encode((cand + t * w) % 3)
        pos = np.searchsorted(cand_codes, shifted)
        pos = np.minimum(pos, len(cand_codes) - 1)
        ok &= cand_codes[pos] == shifted
    return ok


def _sorted(words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    codes = _encode(words)
    order = np.argsort(codes)
    return words[order], codes[order]


def _search_order(cand: np.ndarray) -> np.ndarray:
    # weight-6 words first, then lexicographic
    w = (cand != 0).sum(axis=1)
    return np.lexsort((_encode(cand), w != 6))


@dataclass
class SearchStats:
    nodes: int = 0
    max_dimension: int = 0
    dimension_counts: Counter = None

    def __post_init__(self) -> None:
        if self.dimension_counts is None:
            self.dimension_counts = Counter()


def _initial_candidates() -> tuple[np.ndarray, np.ndarray]:
    mask = _ADMISSIBLE_MASK.copy()
    mask[0] = True  # the zero word
    return _sorted(_ALL[mask])


def _search_rref(stats: SearchStats) -> Iterator[tuple[int, ...]]:
    """Every admissible subspace exactly once, grown through its echelon rows.

    The children of a subspace with echelon rows S are S + <w> where w has a
    leading 1 beyond the last pivot, vanishes at the pivots of S, and S
    vanishes at w's pivot. Yields maximal subspaces as encoded echelon keys.
    """
    cand, codes = _initial_candidates()
    stack = [((), (), cand, codes)]
    while stack:
        rows, pivots, cand, codes = stack.pop()
        stats.nodes += 1
        k = len(rows)
        stats.dimension_counts[k] += 1
        stats.max_dimension = max(stats.max_dimension, k)
        if len(cand) == 3 ** k:
            yield tuple(int(_encode(np.array([r]))[0]) for r in rows)
            continue
        nz = cand != 0
        has = nz.any(axis=1)
        lead_pos = np.where(has, nz.argmax(axis=1), LENGTH)
        lead_val = cand[np.arange(len(cand)), np.minimum(lead_pos, LENGTH - 1)]
        last = pivots[-1] if pivots else -1
        ok = has & (lead_pos > last) & (lead_val == 1)
        if pivots:
            ok &= (cand[:, list(pivots)] == 0).all(axis=1)
            basis = np.array(rows, dtype=np.int8)
            col_free = (basis == 0).all(axis=0)
            ok &= col_free[np.minimum(lead_pos, LENGTH - 1)]
        children = cand[ok]
        for w in children[_search_order(children)][::-1]:
            keep = _compatible(cand, codes, w)
            stack.append((rows + (tuple(int(x) for x in w),), pivots + (int(np.argmax(w != 0)),),
                          cand[keep], codes[keep]))


def _span_array(rows: Sequence[Sequence[int]]) -> np.ndarray:
    k = len(rows)
    coeffs = np.array(list(itertools.product(range(3), repeat=k)), dtype=np.int64).reshape(-1, k)
    return (coeffs @ np.array(rows, dtype=np.int64).reshape(k, LENGTH)) % 3


def _search_from(seed: TernaryWord, stats: SearchStats) -> list[tuple[int, ...]]:
    """Maximal admissible codes containing ``seed``, found depth first."""
    cand, codes = _initial_candidates()
    seed_arr = np.array(seed, dtype=np.int8)
    keep = _compatible(cand, codes, seed_arr)
    start = (seed,)
    stack = [(start, cand[keep], codes[keep])]
    seen = {TernaryCode(start).key}
    found = []
    while stack:
        rows, cand, codes = stack.pop()
        stats.nodes += 1
        k = len(rows)
        stats.dimension_counts[k] += 1
        stats.max_dimension = max(stats.max_dimension, k)
        span_codes = set(_encode(_span_array(rows)).tolist())
        ext_mask = np.array([c not in span_codes for c in codes.tolist()], dtype=bool)
        if not ext_mask.any():
            found.append(TernaryCode(rows).key)
            continue
        ext = cand[ext_mask]
        for w in ext[_search_order(ext)][::-1]:
            child = rows + (TernaryWord(w),)
            key = TernaryCode(child).key
            if key in seen:
                continue
            seen.add(key)
            keep = _compatible(cand, codes, w)
            stack.append((child, cand[keep], codes[keep]))
    return sorted(set(found))


_MONOMIAL_GENERATORS = (
    ((1, 0, 2, 3, 4, 5, 6, 7, 8), (1,) * LENGTH),
    ((1, 2, 3, 4, 5, 6, 7, 8, 0), (1,) * LENGTH),
    (tuple(range(LENGTH)), (2,) + (1,) * (LENGTH - 1)),
)


def _key_rows(key: tuple[int, ...]) -> list[TernaryWord]:
    return [TernaryWord.from_int(n) for n in key]


def _transform_key(key: tuple[int, ...], perm, scale) -> tuple[int, ...]:
    rows = [apply_monomial(w, perm, scale) for w in _key_rows(key)]
    return tuple(int(TernaryWord(r)) for r in _rref(rows))


def monomial_orbit(key: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Orbit of a code (by echelon key) under permutations and coordinate scalings."""
    orbit = {key}
    queue = deque([key])
    while queue:
        k = queue.popleft()
        for perm, scale in _MONOMIAL_GENERATORS:
            img = _transform_key(k, perm, scale)
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return orbit


SEED_WORD = TernaryWord.from_str("111111000")


@dataclass
class Enumeration:
    """Outcome of the admissible-code search."""

    keys: list[tuple[int, ...]]
    representatives: list[tuple[int, ...]]
    orbit_count: int
    stats: SearchStats
    reduce_symmetry: bool

    @property
    def codes(self) -> list[TernaryCode]:
        return [TernaryCode(_key_rows(k)) for k in self.keys]

    def __len__(self) -> int:
        return len(self.keys)


def enumerate_codes(reduce_symmetry: bool = True) -> Enumeration:
    """Exhaustive search for maximal admissible codes of dimension >= 3.

    With ``reduce_symmetry`` the search only looks at codes containing
    111111000 (every admissible code of dimension >= 2 contains a weight-6
    word, and all weight-6 words are monomially equivalent to it) and then
    expands the results to full orbits.
    """
    stats = SearchStats()
    if reduce_symmetry:
        reps = [k for k in _search_from(SEED_WORD, stats) if len(k) >= 3]
        keys: set = set()
        orbit_count = 0
        for rep in reps:
            if rep in keys:
                continue
            keys |= monomial_orbit(rep)
            orbit_count += 1
        all_keys = sorted(keys)
    else:
        all_keys = sorted(k for k in _search_rref(stats) if len(k) >= 3)
        remaining = set(all_keys)
        reps = []
        orbit_count = 0
        while remaining:
            rep = min(remaining)
            reps.append(rep)
            remaining -= monomial_orbit(rep)
            orbit_count += 1
    if stats.max_dimension > 3:
        raise AssertionError("found an admissible code of dimension above 3")
    if any(len(k) != 3 for k in all_keys):
        raise AssertionError("a maximal admissible code of dimension >= 3 is not 3-dimensional")
    return Enumeration(all_keys, sorted(reps), orbit_count, stats, reduce_symmetry)


def enumerate_admissible_codes(reduce_symmetry: bool = True) -> list[TernaryCode]:
    return enumerate_codes(reduce_symmetry).codes
