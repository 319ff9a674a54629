"""Coefficient arithmetic, bivariate polynomials, parsing and substitution."""

from qhc.poly.bipoly import (
    BiPoly,
    ZeroPolynomialError,
    orders,
    scalar_proportional,
    substitute,
)
from qhc.poly.grammar import (
    NonRationalLiteralError,
    PolynomialSyntaxError,
    format_poly,
    parse_poly,
)
from qhc.poly.roots import IrreducibleFactorError, RootSolverError
from qhc.poly.scalar import (
    DEFAULT_TOL,
    EXACT,
    INFINITY,
    Field,
    FloatComplex,
    GaussianRational,
    Mode,
    PointP1,
    Scalar,
    format_scalar,
)

__all__ = [
    "DEFAULT_TOL",
    "EXACT",
    "INFINITY",
    "BiPoly",
    "Field",
    "FloatComplex",
    "GaussianRational",
    "IrreducibleFactorError",
    "Mode",
    "NonRationalLiteralError",
    "PointP1",
    "PolynomialSyntaxError",
    "RootSolverError",
    "Scalar",
    "ZeroPolynomialError",
    "format_poly",
    "format_scalar",
    "orders",
    "parse_poly",
    "scalar_proportional",
    "substitute",
]
