"""Sparse multivariate polynomials with exact coefficients and resultants.

Coefficients are ``Fraction`` or :class:`~cuspkit.algebra.scalars.Eisenstein`.
Terms are kept in a dict keyed by exponent tuples; zero coefficients are
dropped, so two polynomials are equal iff their term dicts are equal.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .matrix import Matrix, det_exact
from .scalars import Eisenstein, as_rational, format_scalar

Exponent = tuple[int, ...]


def _coerce_coeff(c):
    if isinstance(c, Eisenstein):
        return c.a if c.b == 0 else c
    return as_rational(c)


def grlex_key(exp: Exponent):
    """Sort key for graded lexicographic order (highest first when reversed)."""
    return (sum(exp), exp)


class Poly:
    """A polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, object] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            c = _coerce_coeff(c)
            if c != 0:
                prev = clean.get(exp)
                if prev is not None:
                    c = _coerce_coeff(prev + c)
                    if c == 0:
                        del clean[exp]
                        continue
                clean[exp] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> Poly:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def constant(cls, nvars: int, c) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def gens(cls, nvars: int) -> tuple[Poly, ...]:
        return tuple(cls.var(nvars, i) for i in range(nvars))

    # -- basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficients(self):
        return self.terms.values()

    def is_rational(self) -> bool:
        return all(not isinstance(c, Eisenstein) for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, object]:
        return max(self.terms.items(), key=lambda t: t[0])

    def min_order(self) -> int:
        """Lowest total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def homogeneous_part(self, d: int) -> Poly:
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction, Eisenstein)):
            return Poly.constant(self.nvars, other)
        return None

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = _coerce_coeff(s + c)
                if s == 0:
                    del out[e]
                else:
                    out[e] = s
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction, Eisenstein)):
            if other == 0:
                return Poly._raw(self.nvars, {})
            return Poly._raw(self.nvars, {e: _coerce_coeff(c * other) for e, c in self.terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> Poly:
        if isinstance(other, (int, Fraction, Eisenstein)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            inv = 1 / (other if not isinstance(other, int) else Fraction(other))
            return self * inv
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Eisenstein)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: _coerce_coeff(other)}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- division -----------------------------------------------------------
    def divmod_by(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Multivariate division by a single polynomial in lex order.

        The remainder is zero exactly when ``divisor`` divides ``self``.
        """
        divisor = self._lift(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_e, lead_c = divisor.leading_term()
        rem = dict(self.terms)
        quot: dict[Exponent, object] = {}
        leftover: dict[Exponent, object] = {}
        dterms = list(divisor.terms.items())
        while rem:
            e = max(rem)
            c = rem.pop(e)
            if all(a >= b for a, b in zip(e, lead_e)):
                qe = tuple(a - b for a, b in zip(e, lead_e))
                qc = _coerce_coeff(c / lead_c)
                quot[qe] = qc
                for de, dc in dterms:
                    if de == lead_e:
                        continue
                    te = tuple(a + b for a, b in zip(qe, de))
                    v = rem.get(te, 0) - qc * dc
                    v = _coerce_coeff(v)
                    if v == 0:
                        rem.pop(te, None)
                    else:
                        rem[te] = v
            else:
                leftover[e] = c
        return Poly._raw(self.nvars, quot), Poly._raw(self.nvars, leftover)

    def exact_div(self, divisor) -> Poly:
        if isinstance(divisor, (int, Fraction, Eisenstein)):
            return self / divisor
        q, r = self.divmod_by(divisor)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    # -- calculus and substitution ------------------------------------------
    def diff(self, var: int) -> Poly:
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                ne = list(e)
                ne[var] = k - 1
                out[tuple(ne)] = c * k
        return Poly(self.nvars, out)

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("wrong number of coordinates")
        total = 0
        powers = [_power_table(x, self.degree_in(i)) for i, x in enumerate(point)]
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k]
            total = total + t
        return _coerce_coeff(total) if not isinstance(total, Eisenstein) else total

    def compose(self, images: Sequence[Poly]) -> Poly:
        """Substitute polynomial ``images[i]`` for variable ``i``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars
        powers = [_power_table(p, self.degree_in(i)) if self.terms else [] for i, p in enumerate(images)]
        total = Poly(target)
        for e, c in self.terms.items():
            t = Poly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k]
            total = total + t
        return total

    def coefficients_in(self, var: int) -> list[Poly]:
        """Coefficients as polynomials (same ring, ``var`` absent), lowest degree first."""
        deg = self.degree_in(var)
        buckets: list[dict] = [{} for _ in range(max(deg, 0) + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[var]
            ne[var] = 0
            buckets[k][tuple(ne)] = c
        return [Poly._raw(self.nvars, b) for b in buckets]

    def drop_variable(self, var: int) -> Poly:
        if self.degree_in(var) > 0:
            raise ValueError(f"variable {var} still occurs")
        return Poly._raw(self.nvars - 1, {e[:var] + e[var + 1:]: c for e, c in self.terms.items()})

    def embed(self, nvars: int, positions: Sequence[int]) -> Poly:
        """Re-home into a ring with ``nvars`` variables; variable i goes to ``positions[i]``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] += k
            out[tuple(ne)] = c
        return Poly(nvars, out)

    def monomial_content(self) -> Exponent:
        """Largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def primitive(self) -> Poly:
        """Content-free normal form.

        Rational polynomials are scaled to coprime integer coefficients with a
        positive leading (grlex) coefficient; others are made monic.
        """
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        if self.is_rational():
            den = lcm(*(c.denominator for c in self.terms.values()))
            ints = [int(c * den) for c in self.terms.values()]
            g = 0
            for v in ints:
                g = gcd(g, v)
            scale = Fraction(den, g) * (1 if lead > 0 else -1)
            return self * scale
        return self * (1 / lead)

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _power_table(x, k: int) -> list:
    table = [1]
    for _ in range(max(k, 0)):
        table.append(table[-1] * x)
    return table


def format_poly(p: Poly, names: Sequence[str] | None = None) -> str:
    if p.is_zero():
        return "0"
    names = names or [f"x{i}" for i in range(p.nvars)]
    parts = []
    for e, c in p.sorted_terms():
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        cs = format_scalar(c)
        if isinstance(c, Eisenstein) and not c.is_rational():
            cs = f"({cs})"
        parts.append(cs if not mono else f"{cs}*{mono}")
    return " + ".join(parts)


class HomogPoly(Poly):
    """Homogeneous polynomial in three variables (a plane curve equation)."""

    __slots__ = ("degree",)

    def __init__(self, terms: Mapping[Exponent, object] | Iterable = (), degree: int | None = None) -> None:
        super().__init__(3, terms)
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        if degree is None:
            if not degs:
                raise ValueError("degree of the zero form must be given")
            degree = degs.pop()
        elif degs and degs != {degree}:
            raise ValueError(f"terms have degree {degs.pop()}, expected {degree}")
        object.__setattr__(self, "degree", degree)

    @classmethod
    def from_poly(cls, p: Poly, degree: int | None = None) -> HomogPoly:
        if p.nvars != 3:
            raise ValueError("a plane form needs exactly three variables")
        return cls(p.terms, degree)

    def serialize(self) -> list[list]:
        """``[[i, j, k], "coefficient"]`` pairs in descending graded-lex order."""
        return [[list(e), format_scalar(c)] for e, c in self.sorted_terms()]

    def gradient(self) -> tuple[Poly, Poly, Poly]:
        return tuple(self.diff(i) for i in range(3))

    def hessian_at(self, point: Sequence) -> Matrix:
        second = [[self.diff(i).diff(j) for j in range(3)] for i in range(3)]
        return Matrix.from_rows([[second[i][j].evaluate(point) for j in range(3)] for i in range(3)])


def sylvester_matrix(f: Poly, g: Poly, var: int) -> Matrix:
    """Sylvester matrix of ``f`` and ``g`` viewed as polynomials in ``var``."""
    fc = f.coefficients_in(var)[::-1]
    gc = g.coefficients_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = Poly(f.nvars)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return Matrix.from_rows(rows)


def resultant(f: Poly, g: Poly, var: int) -> Poly:
    """Classical resultant of ``f`` and ``g`` with respect to variable ``var``.

    The result still lives in the same ring but no longer involves ``var``.
    """
    if f.is_zero() or g.is_zero():
        return Poly(f.nvars)
    m, n = f.degree_in(var), g.degree_in(var)
    if m <= 0 and n <= 0:
        raise ValueError("both polynomials are constant in the eliminated variable")
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    det = det_exact(sylvester_matrix(f, g, var))
    return det if isinstance(det, Poly) else Poly.constant(f.nvars, det)


def resultant_eliminate(f: HomogPoly, g: HomogPoly, var: int) -> HomogPoly:
    """Eliminate one of the three plane coordinates from two forms.

    Returns a form in the remaining two coordinates (``var`` has exponent
    zero everywhere) whose degree follows the weighted-homogeneity count.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("cannot eliminate from the zero form")
    m, n = f.degree_in(var), g.degree_in(var)
    res = resultant(f, g, var)
    deg = (f.degree - m) * n + (g.degree - n) * m + m * n
    return HomogPoly(res.terms, deg)


def strip_factor(p: Poly, factor: Poly) -> tuple[Poly, int]:
    """Divide out ``factor`` as often as it goes exactly; returns (quotient, count)."""
    count = 0
    while not p.is_zero():
        q, r = p.divmod_by(factor)
        if not r.is_zero():
            break
        p = q
        count += 1
    return p, count
