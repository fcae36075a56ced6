"""Exact arithmetic kernel: Q, F3, Q(w), dense matrices, polynomials, resultants."""
from .matrix import (Matrix, ShapeError, SingularMatrixError, det_exact, det_mod3,
                     nullspace, rank, solve_exact)
from .poly import HomogPoly, Poly, resultant, resultant_eliminate, strip_factor, sylvester_matrix
from .scalars import (F3, OMEGA, Eisenstein, Rational, format_eisenstein, format_rational,
                      format_scalar, omega_power, parse_eisenstein, parse_rational)

eisenstein_power_omega = omega_power

__all__ = [
    "Matrix", "ShapeError", "SingularMatrixError", "det_exact", "det_mod3", "nullspace",
    "rank", "solve_exact", "HomogPoly", "Poly", "resultant", "resultant_eliminate",
    "strip_factor", "sylvester_matrix", "F3", "OMEGA", "Eisenstein", "Rational",
    "format_eisenstein", "format_rational", "format_scalar", "omega_power",
    "eisenstein_power_omega", "parse_eisenstein", "parse_rational",
]
