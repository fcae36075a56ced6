"""Plane geometry of the Hesse cubic x0^3 + x1^3 + x2^3 + 3*lam*x0*x1*x2.

Points and lines of P^2 carry coordinates in Q(w). The dual curve is
obtained by elimination; cusp types and intersection multiplicities are
read off exact local expansions.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra import (Eisenstein, HomogPoly, Matrix, Poly, det_exact, format_scalar, nullspace,
                      omega_power, rank, resultant, solve_exact, strip_factor)
from .algebra.scalars import as_rational
from .lattice import (BasisKind, GramLattice, RationalClass, build_cusp_lattice, lemma2_membership,
                      to_f_basis)


class Smoothness(str, enum.Enum):
    SMOOTH = "Smooth"
    SINGULAR = "Singular"
    FERMAT = "Fermat"


class DegenerateCubic(ValueError):
    """The requested construction needs a smooth, non-Fermat member of the pencil."""


def _eis(x) -> Eisenstein:
    return x if isinstance(x, Eisenstein) else Eisenstein(as_rational(x))


def _canonical(coords: Sequence) -> tuple[Eisenstein, ...]:
    coords = tuple(_eis(c) for c in coords)
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("all homogeneous coordinates vanish")
    inv = lead.inverse()
    return tuple(c * inv for c in coords)


class ProjPoint:
    """A point of P^2 over Q(w); equality is up to a nonzero scalar."""

    __slots__ = ("coords",)

    def __init__(self, *coords) -> None:
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("a plane point has three coordinates")
        object.__setattr__(self, "coords", _canonical(coords))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(format_scalar, self.coords))})"

    def serialize(self) -> list[str]:
        return [format_scalar(c) for c in self.coords]


class ProjLine(ProjPoint):
    """A line of P^2 given by dual coordinates; also a point of the dual plane."""

    __slots__ = ()

    def contains(self, p: ProjPoint) -> bool:
        return sum((a * b for a, b in zip(self.coords, p.coords)), Eisenstein(0)) == 0

    def as_dual_point(self) -> ProjPoint:
        return ProjPoint(self.coords)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return det_exact(Matrix.from_rows([p.coords, q.coords, r.coords])) == 0


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    (a0, a1, a2), (b0, b1, b2) = p.coords, q.coords
    return ProjLine(a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)


def point_on_line(line: ProjLine, avoid: ProjPoint) -> ProjPoint:
    """A point of ``line`` different from ``avoid``."""
    for v in nullspace(Matrix.from_rows([line.coords])):
        q = ProjPoint(v)
        if q != avoid:
            return q
    raise AssertionError("a line has at least two points")


# -- the cubic ------------------------------------------------------------

X = Poly.gens(3)


@dataclass(frozen=True)
class HesseCubic:
    lam: Eisenstein

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", _eis(self.lam))

    @cached_property
    def poly(self) -> HomogPoly:
        x0, x1, x2 = X
        return HomogPoly.from_poly(x0 ** 3 + x1 ** 3 + x2 ** 3 + 3 * self.lam * x0 * x1 * x2)

    def contains(self, p: ProjPoint) -> bool:
        return self.poly.evaluate(p.coords) == 0

    def gradient_at(self, p: ProjPoint) -> tuple:
        return tuple(g.evaluate(p.coords) for g in self.poly.gradient())

    def hessian_det(self, p: ProjPoint):
        return det_exact(self.poly.hessian_at(p.coords))

    def serialize(self) -> dict:
        return {"lambda": format_scalar(self.lam), "poly": self.poly.serialize()}


def smoothness_check(c: HesseCubic) -> Smoothness:
    """Fast criterion: singular exactly when lam^3 = -1; lam = 0 is the Fermat cubic."""
    if c.lam == 0:
        return Smoothness.FERMAT
    if c.lam ** 3 == -1:
        return Smoothness.SINGULAR
    return Smoothness.SMOOTH


def monomials(n: int, degree: int) -> list[tuple[int, ...]]:
    return [e for e in itertools.product(range(degree + 1), repeat=n) if sum(e) == degree][::-1]


def macaulay_matrix(forms: Sequence[HomogPoly]) -> Matrix:
    """Rows m * f_i for all monomials m with deg(m f_i) = D = sum(deg f_i - 1) + 1."""
    top = sum(f.degree - 1 for f in forms) + 1
    cols = monomials(3, top)
    index = {e: j for j, e in enumerate(cols)}
    rows = []
    for f in forms:
        for m in monomials(3, top - f.degree):
            row = [Fraction(0)] * len(cols)
            for e, c in f.terms.items():
                row[index[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return Matrix.from_rows(rows)


def has_common_zero(forms: Sequence[HomogPoly]) -> bool:
    """Do three plane forms share a projective zero (over the algebraic closure)?

    Without a common zero the forms are a regular sequence and their ideal
    contains every monomial of degree D; with one, it cannot. So the test is
    whether the Macaulay matrix in degree D has full column rank.
    """
    if len(forms) != 3:
        raise ValueError("the criterion is for three forms in three variables")
    m = macaulay_matrix(forms)
    return rank(m) < m.cols


def gradient_oracle(c: HesseCubic) -> Smoothness:
    """Smoothness decided from the partial derivatives alone."""
    if c.lam == 0:
        return Smoothness.FERMAT
    grads = [HomogPoly.from_poly(g) for g in c.poly.gradient()]
    return Smoothness.SINGULAR if has_common_zero(grads) else Smoothness.SMOOTH


def _require_nonsingular(c: HesseCubic) -> None:
    if smoothness_check(c) is Smoothness.SINGULAR:
        raise DegenerateCubic(f"the cubic with lambda={format_scalar(c.lam)} is singular")


def _require_smooth_non_fermat(c: HesseCubic) -> None:
    kind = smoothness_check(c)
    if kind is not Smoothness.SMOOTH:
        raise DegenerateCubic(f"lambda={format_scalar(c.lam)} gives a {kind.value} cubic")


# -- flexes and the translation group ---------------------------------------------

def flex_points() -> list[ProjPoint]:
    """The nine base points of the pencil on the coordinate triangle.

    (0:1:-w^k), (1:0:-w^k), (1:-w^k:0) for k = 0, 1, 2.
    """
    pts = []
    for k in range(3):
        pts.append(ProjPoint(0, 1, -omega_power(k)))
    for k in range(3):
        pts.append(ProjPoint(1, 0, -omega_power(k)))
    for k in range(3):
        pts.append(ProjPoint(1, -omega_power(k), 0))
    return pts


def flexes(c: HesseCubic) -> list[ProjPoint]:
    """Flexes of a nonsingular Hesse cubic, each checked on the curve and on the Hessian."""
    _require_nonsingular(c)
    pts = flex_points()
    for p in pts:
        if not c.contains(p):
            raise AssertionError(f"{p} is not on the cubic")
        if c.hessian_det(p) != 0:
            raise AssertionError(f"Hessian does not vanish at {p}")
    return pts


SIGMA = Matrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
TAU = Matrix.from_rows([[1, 0, 0], [0, omega_power(1), 0], [0, 0, omega_power(2)]])


def symmetry_matrix(which: str) -> Matrix:
    if which in ("sigma", "σ"):
        return SIGMA
    if which in ("tau", "τ"):
        return TAU
    raise ValueError(f"unknown symmetry {which!r}")


def symmetry_action(which: str, p: ProjPoint) -> ProjPoint:
    """sigma rotates coordinates (new x_i = old x_{i-1}); tau scales x_i by w^i."""
    return type(p)(symmetry_matrix(which) @ p.coords)


def preserves_cubic(which: str, c: HesseCubic) -> bool:
    images = [sum((m * x for m, x in zip(row, X)), Poly(3)) for row in symmetry_matrix(which).tolist()]
    return c.poly.compose(images) == c.poly


@dataclass(frozen=True)
class FlexLabeling:
    """Flexes labelled by F3^2 so that sigma and tau act as unit translations."""

    labels: dict
    collinear_triples: tuple[tuple[ProjPoint, ProjPoint, ProjPoint], ...]

    def point(self, label: tuple[int, int]) -> ProjPoint:
        return next(p for p, lab in self.labels.items() if lab == label)

    def label_lines(self) -> list[tuple[tuple[int, int], ...]]:
        return [tuple(sorted(self.labels[p] for p in t)) for t in self.collinear_triples]

    def cipher(self, p: ProjPoint) -> int:
        a, b = self.labels[p]
        return 3 * a + b + 1

    def cipher_lines(self) -> list[tuple[int, int, int]]:
        return sorted(tuple(sorted(self.cipher(p) for p in t)) for t in self.collinear_triples)


def affine_lines_f3() -> set[frozenset]:
    lines = set()
    for d in ((0, 1), (1, 0), (1, 1), (1, 2)):
        for a in range(3):
            for b in range(3):
                lines.add(frozenset(((a + t * d[0]) % 3, (b + t * d[1]) % 3) for t in range(3)))
    return lines


def flex_labeling(points: Sequence[ProjPoint]) -> FlexLabeling:
    base = points[0]
    labels: dict[ProjPoint, tuple[int, int]] = {}
    for a in range(3):
        for b in range(3):
            p = base
            for _ in range(b):
                p = symmetry_action("tau", p)
            for _ in range(a):
                p = symmetry_action("sigma", p)
            if p in labels:
                raise AssertionError("translation action is not simply transitive")
            labels[p] = (a, b)
    if set(labels) != set(points):
        raise AssertionError("translation orbit differs from the flex set")
    for p, (a, b) in labels.items():
        if labels[symmetry_action("sigma", p)] != ((a + 1) % 3, b):
            raise AssertionError("sigma is not a translation in the labelling")
        if labels[symmetry_action("tau", p)] != (a, (b + 1) % 3):
            raise AssertionError("tau is not a translation in the labelling")
    triples = tuple(t for t in itertools.combinations(points, 3) if collinear(*t))
    lab = FlexLabeling(labels, triples)
    if {frozenset(x) for x in lab.label_lines()} != affine_lines_f3():
        raise AssertionError("collinear flex triples are not the affine lines")
    return lab


def parallel_pairs(lab: FlexLabeling) -> list[tuple[tuple[ProjPoint, ...], tuple[ProjPoint, ...]]]:
    """All 12 unordered pairs of distinct parallel lines of flexes."""
    lines = [tuple(t) for t in lab.collinear_triples]
    pairs = []
    for l1, l2 in itertools.combinations(lines, 2):
        if not set(l1) & set(l2):
            pairs.append((l1, l2))
    return pairs


def pair_direction(lab: FlexLabeling, pair) -> tuple[int, int]:
    """Direction in F3^2 shared by the two lines of a parallel pair, scaled to lead with 1."""
    (a0, b0), (a1, b1) = (lab.labels[p] for p in pair[0][:2])
    d = ((a1 - a0) % 3, (b1 - b0) % 3)
    lead = next(x for x in d if x)
    return tuple((x * lead) % 3 for x in d)


def standard_pair(points: Sequence[ProjPoint] | None = None):
    """The flexes on x0 = 0 and on x1 = 0."""
    pts = list(points or flex_points())
    return tuple(pts[0:3]), tuple(pts[3:6])


# -- tangents and the conic ----------------------------------------------------

def inflectional_tangent(c: HesseCubic, p: ProjPoint) -> ProjLine:
    """Tangent line at a flex; checked to meet the cubic only at p (triple root)."""
    if not c.contains(p):
        raise ValueError(f"{p} is not on the cubic")
    grad = c.gradient_at(p)
    if all(g == 0 for g in grad):
        raise DegenerateCubic(f"{p} is a singular point")
    line = ProjLine(grad)
    q = point_on_line(line, p)
    t = Poly.gens(1)[0]
    restricted = c.poly.compose([pc + t * qc for pc, qc in zip(p.coords, q.coords)])
    if restricted.min_order() != 3:
        raise AssertionError(f"tangent at {p} does not meet the cubic with multiplicity 3")
    return line


def tangent_formula(lam, family: int, k: int) -> ProjLine:
    """Closed forms for the tangents at (0:1:-w^k) (family 0) and (1:0:-w^k) (family 1)."""
    lam = _eis(lam)
    wk, w2k = omega_power(k), omega_power(2 * k)
    if family == 0:
        return ProjLine(-lam * wk, 1, w2k)
    if family == 1:
        return ProjLine(1, -lam * wk, w2k)
    raise ValueError("family is 0 (x0 = 0) or 1 (x1 = 0)")


@dataclass(frozen=True)
class ConicForm:
    """Symmetric 3x3 matrix A; the conic is xi^T A xi = 0."""

    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.rows != 3 or not self.matrix.is_symmetric():
            raise ValueError("conic matrix must be symmetric 3x3")

    @classmethod
    def from_coefficients(cls, c: Sequence) -> ConicForm:
        """From (c00, c01, c02, c11, c12, c22) of sum c_ij xi_i xi_j (i <= j)."""
        c00, c01, c02, c11, c12, c22 = (_eis(x) for x in c)
        half = Fraction(1, 2)
        return cls(Matrix.from_rows([[c00, c01 * half, c02 * half],
                                     [c01 * half, c11, c12 * half],
                                     [c02 * half, c12 * half, c22]]))

    def coefficients(self) -> tuple:
        a = self.matrix
        return (a[0, 0], 2 * a[0, 1], 2 * a[0, 2], a[1, 1], 2 * a[1, 2], a[2, 2])

    def evaluate(self, xi: Sequence):
        xi = tuple(_eis(x) for x in xi)
        return sum((x * y for x, y in zip(xi, self.matrix @ xi)), Eisenstein(0))

    def bilinear(self, u: Sequence, v: Sequence):
        return sum((x * y for x, y in zip(u, self.matrix @ tuple(v))), Eisenstein(0))

    def determinant(self):
        return det_exact(self.matrix)

    def is_nondegenerate(self) -> bool:
        return self.determinant() != 0

    def as_poly(self) -> HomogPoly:
        mons = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
        return HomogPoly(dict(zip(mons, self.coefficients())), 2)

    def transported(self, m: Matrix) -> ConicForm:
        """Image in dual coordinates under the point map x -> m x (lines move by m^{-T})."""
        return ConicForm(m @ self.matrix @ m.T)

    def normalized(self) -> tuple:
        return _canonical(self.coefficients())

    def same_conic(self, other: ConicForm) -> bool:
        return self.normalized() == other.normalized()

    def serialize(self) -> dict:
        return {"coefficients": [format_scalar(x) for x in self.coefficients()],
                "monomials": ["xi0^2", "xi0*xi1", "xi0*xi2", "xi1^2", "xi1*xi2", "xi2^2"]}


def standard_conic(lam) -> ConicForm:
    """xi0 * xi1 + lam * xi2^2."""
    return ConicForm.from_coefficients((0, 1, 0, 0, 0, lam))


def conic_through(points: Sequence[ProjPoint]) -> ConicForm:
    """The unique conic through five or more points in general enough position."""
    rows = []
    for p in points:
        a, b, c = p.coords
        rows.append([a * a, a * b, a * c, b * b, b * c, c * c])
    kernel = nullspace(Matrix.from_rows(rows))
    if len(kernel) != 1:
        raise ValueError(f"points lie on a {len(kernel)}-dimensional family of conics")
    return ConicForm.from_coefficients(kernel[0])


def pair_tangent_points(c: HesseCubic, pair) -> list[ProjPoint]:
    return [inflectional_tangent(c, p).as_dual_point() for line in pair for p in line]


def conic_for_pair(c: HesseCubic, pair) -> ConicForm:
    return conic_through(pair_tangent_points(c, pair))


def conic_tangency_check(c: HesseCubic, pair=None) -> bool:
    """Do the six inflectional tangents along two parallel lines touch one nondegenerate conic?

    For the x0 = 0 / x1 = 0 pair the conic is xi0 xi1 + lam xi2^2; pairs in
    the same parallel class use its image under sigma, and the remaining
    pairs use the conic fitted through five of the six tangents.
    """
    _require_smooth_non_fermat(c)
    if pair is None:
        pair = standard_pair()
    duals = pair_tangent_points(c, pair)
    conic = expected_conic(c, pair)
    if conic is None:
        conic = conic_through(duals[:5])
    return conic.is_nondegenerate() and all(conic.evaluate(d.coords) == 0 for d in duals)


def expected_conic(c: HesseCubic, pair) -> ConicForm | None:
    """The standard conic transported by a power of sigma, if that power maps the standard pair to ``pair``."""
    target = {frozenset(line) for line in pair}
    std = standard_pair()
    conic = standard_conic(c.lam)
    m = Matrix.identity(3)
    for _ in range(3):
        image = {frozenset(_apply(m, p) for p in line) for line in std}
        if image == target:
            return conic.transported(m)
        m = SIGMA @ m
    return None


def _apply(m: Matrix, p: ProjPoint) -> ProjPoint:
    return ProjPoint(m @ p.coords)


# -- dual curve -------------------------------------------------------------

@dataclass(frozen=True)
class DualCurve:
    poly: HomogPoly
    stripped: dict

    @property
    def degree(self) -> int:
        return self.poly.degree


def dual_sextic(c: HesseCubic) -> DualCurve:
    """Dual curve of a smooth Hesse cubic by elimination.

    A line xi is tangent exactly when the binary cubic G obtained by
    restricting the cubic to it has a repeated root, i.e. when the two
    partials of G have a common root. G is parametrized as
    F(xi2*s, xi2*u, -(xi0*s + xi1*u)); the resultant of dG/ds and dG/du in s
    then carries the extraneous factors u^4 and xi2^6, which are divided out.
    """
    _require_nonsingular(c)
    s, u, xi0, xi1, xi2 = Poly.gens(5)
    g = c.poly.compose([xi2 * s, xi2 * u, -(xi0 * s + xi1 * u)])
    res = resultant(g.diff(0), g.diff(1), 0)
    stripped = {}
    res, stripped["u"] = strip_factor(res, u)
    res, stripped["xi2"] = strip_factor(res, xi2)
    res = res.drop_variable(1).drop_variable(0)
    poly = HomogPoly.from_poly(res.primitive())
    if poly.degree != 6:
        raise AssertionError(f"cleaned dual curve has degree {poly.degree}")
    return DualCurve(poly, stripped)


def dual_membership_oracle(c: HesseCubic, dual: HomogPoly) -> bool:
    """dual(grad F) must vanish on the cubic, i.e. be divisible by F."""
    composed = dual.compose(list(c.poly.gradient()))
    return composed.divmod_by(c.poly)[1].is_zero()


class PointType(str, enum.Enum):
    NOT_ON_CURVE = "NotOnCurve"
    SMOOTH = "Smooth"
    A2 = "A2"
    NODE = "Node"
    OTHER = "Other"


@dataclass(frozen=True)
class LocalExpansion:
    chart: int
    coords: tuple[int, int]
    poly: Poly

    def part(self, d: int) -> Poly:
        return self.poly.homogeneous_part(d)


def local_expansion(f: Poly, p: ProjPoint) -> LocalExpansion:
    """f near p in the affine chart where p's leading coordinate is 1; p is the origin."""
    chart = next(i for i, x in enumerate(p.coords) if x == 1)
    a, b = [i for i in range(3) if i != chart]
    uu, vv = Poly.gens(2)
    images = [None] * 3
    images[chart] = Poly.constant(2, 1)
    images[a] = uu + p.coords[a]
    images[b] = vv + p.coords[b]
    return LocalExpansion(chart, (a, b), f.compose(images))


def _binary_at(form: Poly, direction: Sequence):
    return form.evaluate(tuple(direction))


@dataclass(frozen=True)
class SingularityInfo:
    point: ProjPoint
    kind: PointType
    tangent_direction: tuple | None = None


def classify_point(f: Poly, p: ProjPoint) -> SingularityInfo:
    """Local type of the plane curve f = 0 at p.

    A double point whose quadratic part is a square l^2 and whose cubic part
    is not divisible by l is a cusp (A2).
    """
    loc = local_expansion(f, p)
    if loc.poly.constant_term() != 0:
        return SingularityInfo(p, PointType.NOT_ON_CURVE)
    if not loc.part(1).is_zero():
        return SingularityInfo(p, PointType.SMOOTH)
    q = loc.part(2)
    if q.is_zero():
        return SingularityInfo(p, PointType.OTHER)
    alpha = q.terms.get((2, 0), 0)
    beta = q.terms.get((1, 1), 0)
    gamma = q.terms.get((0, 2), 0)
    if beta * beta - 4 * alpha * gamma != 0:
        return SingularityInfo(p, PointType.NODE)
    # q = alpha (u + r v)^2 or gamma v^2; the tangent direction is the root of l
    if alpha != 0:
        direction = (-beta / (2 * alpha), Eisenstein(1))
    else:
        direction = (Eisenstein(1), Eisenstein(0))
    direction = tuple(_eis(x) for x in direction)
    if _binary_at(loc.part(3), direction) == 0:
        return SingularityInfo(p, PointType.OTHER, direction)
    return SingularityInfo(p, PointType.A2, direction)


def dual_flex_points(c: HesseCubic) -> list[ProjPoint]:
    return [inflectional_tangent(c, p).as_dual_point() for p in flexes(c)]


@dataclass(frozen=True)
class ConicContact:
    point: ProjPoint
    multiplicity: int
    transversal: bool


@dataclass(frozen=True)
class ConicIntersection:
    contacts: tuple[ConicContact, ...]
    pullback_degree: int

    @property
    def total(self) -> int:
        return sum(c.multiplicity for c in self.contacts)

    def accounts_for_everything(self, curve_degree: int) -> bool:
        return self.total == 2 * curve_degree == self.pullback_degree


def conic_parametrization(conic: ConicForm, p: ProjPoint) -> tuple[tuple[Poly, Poly, Poly], object]:
    """Quadratic parametrization t -> conic through p, and the parameter of p.

    Projecting from p: for v(t) = e + t e', the second intersection of the
    line p v(t) with the conic is Q(v) p - 2 B(p, v) v.
    """
    if conic.evaluate(p.coords) != 0:
        raise ValueError(f"{p} is not on the conic")
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for e, ep in itertools.permutations(basis, 2):
        if det_exact(Matrix.from_rows([p.coords, tuple(map(_eis, e)), tuple(map(_eis, ep))])) == 0:
            continue
        if conic.bilinear(p.coords, ep) != 0:
            break
    else:
        raise AssertionError("no admissible projection frame")
    t = Poly.gens(1)[0]
    v = [Poly.constant(1, e[i]) + t * ep[i] for i in range(3)]
    qv = sum((conic.matrix[i, j] * v[i] * v[j] for i in range(3) for j in range(3)), Poly(1))
    bpv = sum((conic.matrix[i, j] * p.coords[i] * v[j] for i in range(3) for j in range(3)), Poly(1))
    xi = tuple(qv * p.coords[i] - 2 * bpv * v[i] for i in range(3))
    t0 = -conic.bilinear(p.coords, e) / conic.bilinear(p.coords, ep)
    return xi, t0


def _order_at(h: Poly, t0) -> int:
    t = Poly.gens(1)[0]
    return h.compose([t + t0]).min_order()


def conic_cusp_intersection(dual: HomogPoly, conic: ConicForm, points: Sequence[ProjPoint]) -> ConicIntersection:
    """Local intersection multiplicities of the conic with the dual curve at the given cusps.

    Each multiplicity is the vanishing order of dual(xi(t)) at the cusp's
    parameter. The pullback degree is reported so that Bezout (2 * 6 = 12)
    can confirm there are no further intersections.
    """
    if not conic.is_nondegenerate():
        raise ValueError("the conic is degenerate")
    contacts = []
    pullback_degree = None
    for p in points:
        xi, t0 = conic_parametrization(conic, p)
        h = dual.compose(list(xi))
        pullback_degree = h.total_degree()
        mult = _order_at(h, t0)
        if mult <= 0:
            raise ValueError(f"{p} is not on the dual curve")
        info = classify_point(dual, p)
        loc = local_expansion(conic.as_poly(), p)
        lin = loc.part(1)
        conic_dir = (-lin.terms.get((0, 1), 0), lin.terms.get((1, 0), 0))
        transversal = True
        if info.tangent_direction is not None:
            d = info.tangent_direction
            transversal = d[0] * conic_dir[1] - d[1] * conic_dir[0] != 0
        contacts.append(ConicContact(p, mult, transversal))
    return ConicIntersection(tuple(contacts), pullback_degree if pullback_degree is not None else -1)


# -- the class of R - R' ------------------------------------------------------

def rr_lattice(p: int = 9) -> GramLattice:
    """E_1..E_p, E_1'..E_p', H with E^2 = -2, E.E' = 1 within a pair, H^2 = 2, H.E = 0."""
    labels = [f"E{i}" for i in range(1, p + 1)] + [f"E{i}'" for i in range(1, p + 1)] + ["H"]
    n = 2 * p + 1
    g = [[0] * n for _ in range(n)]
    for i in range(p):
        g[i][i] = g[p + i][p + i] = -2
        g[i][p + i] = g[p + i][i] = 1
    g[n - 1][n - 1] = 2
    return GramLattice(tuple(labels), Matrix.from_rows(g), BasisKind.E_EPRIME_H)


@dataclass(frozen=True)
class RRSolution:
    rr: RationalClass
    n: Fraction
    n_unprimed: tuple[Fraction, ...]
    n_primed: tuple[Fraction, ...]
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _six_cusp_class(coeff_e: int, coeff_ep: int, p: int = 6) -> RationalClass:
    lat = build_cusp_lattice(p)
    coeffs = []
    for _ in range(p):
        coeffs += [Fraction(coeff_e, 3), Fraction(coeff_ep, 3)]
    return RationalClass(lat, coeffs)


def solve_rr_class(distinguished: int = 6, p: int = 9) -> RRSolution:
    """Solve for R - R' = sum n_i E_i + n_i' E_i' + n H from its intersection numbers.

    (R - R').E_i = 1 and (R - R').E_i' = -1 at the distinguished cusps, and
    every other pairing (including with H) vanishes.
    """
    lat = rr_lattice(p)
    rhs = [1 if i < distinguished else 0 for i in range(p)]
    rhs += [-1 if i < distinguished else 0 for i in range(p)]
    rhs += [0]
    sol = solve_exact(lat.gram, rhs)
    rr = RationalClass(lat, sol)
    n_e, n_ep, n_h = sol[:p], sol[p:2 * p], sol[2 * p]

    checks = {}
    checks["resubstitution"] = all(rr.pairing_with_basis(lab) == b for lab, b in zip(lat.basis_labels, rhs))
    checks["three_rr_integral"] = (rr * 3).is_integral()
    three_rr = rr * 3
    want = [(-1 if i < distinguished else 0) for i in range(p)] + [(1 if i < distinguished else 0) for i in range(p)] + [0]
    checks["three_rr_is_sum_E_prime_minus_E"] = list(three_rr.coeffs) == want
    # sum (2E_i + E_i') - 3(R - R') = 3 sum E_i and sum (E_i + 2E_i') + 3(R - R') = 3 sum E_i'
    first = [2 if i < distinguished else 0 for i in range(p)] + [1 if i < distinguished else 0 for i in range(p)] + [0]
    second = [1 if i < distinguished else 0 for i in range(p)] + [2 if i < distinguished else 0 for i in range(p)] + [0]
    d1 = [a - b for a, b in zip(first, three_rr.coeffs)]
    d2 = [a + b for a, b in zip(second, three_rr.coeffs)]
    checks["first_pattern_3_divisible"] = all(Fraction(x) / 3 == int(Fraction(x) / 3) for x in d1)
    checks["second_pattern_3_divisible"] = all(Fraction(x) / 3 == int(Fraction(x) / 3) for x in d2)
    checks["lemma2_first_pattern"] = lemma2_membership(to_f_basis(_six_cusp_class(2, 1, distinguished)))
    checks["lemma2_second_pattern"] = lemma2_membership(to_f_basis(_six_cusp_class(1, 2, distinguished)))
    return RRSolution(rr, n_h, tuple(n_e), tuple(n_ep), checks)


def six_cusp_word(distinguished: int = 6, p: int = 9) -> tuple[int, ...]:
    """The ternary word 3*phi mod 3 of (1/3) sum_{i<=6} (2E_i + E_i') = (1/3) sum F_i."""
    cls = to_f_basis(_six_cusp_class(2, 1, distinguished))
    phis = cls.coeffs[1::2]
    word = [int(3 * x) % 3 for x in phis] + [0] * (p - distinguished)
    return tuple(word)
