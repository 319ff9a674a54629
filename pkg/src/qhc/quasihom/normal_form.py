"""The unique decomposition ``mu * x^m * y^n * prod(y^p - lambda * x^q)``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

from qhc.poly.bipoly import BiPoly, orders
from qhc.poly.grammar import format_poly, signed_coefficient
from qhc.poly.roots import aberth_roots, gaussian_rational_roots
from qhc.poly.scalar import (
    EXACT,
    Field,
    FloatComplex,
    GaussianRational,
    Scalar,
    format_scalar,
    scalar_sort_key,
)
from qhc.quasihom.weights import require_weights

logger = logging.getLogger(__name__)


class NonCommodeError(ValueError):
    """Raised when the commode factorisation receives a non-commode polynomial."""


@dataclass(frozen=True, eq=False)
class NormalForm:
    """``mu * x^m * y^n * prod(y^p - lambda * x^q)`` with ``gcd(p, q) = 1`` and ``p <= q``.

    When ``swapped`` is set the decomposition describes the input with ``x`` and
    ``y`` exchanged.
    """

    mu: Scalar
    m: int
    n: int
    p: int
    q: int
    lambdas: tuple[Scalar, ...] = ()
    swapped: bool = False
    field: Field = EXACT

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(sorted(self.lambdas, key=scalar_sort_key)))

    def branch(self, lam: Scalar) -> BiPoly:
        """The factor ``y^p - lam * x^q``."""
        return BiPoly({(0, self.p): 1, (self.q, 0): -lam}, self.field)

    def expand_normal_coordinates(self) -> BiPoly:
        """The product in the coordinates where ``p <= q`` holds."""
        result = BiPoly.monomial(self.m, self.n, self.mu, self.field)
        for lam in self.lambdas:
            result = result * self.branch(lam)
        return result

    def expand(self) -> BiPoly:
        """The polynomial this decomposition describes, in the input's coordinates."""
        expanded = self.expand_normal_coordinates()
        return expanded.swap() if self.swapped else expanded

    def axis_names(self) -> tuple[str, str]:
        """Names in the input's coordinates of the normal-form ``x`` and ``y``."""
        return ("y", "x") if self.swapped else ("x", "y")

    def branch_text(self, lam: Scalar) -> str:
        """``(y^p - lam*x^q)`` written in the input's coordinates."""
        branch = self.branch(lam)
        return f"({format_poly(branch.swap() if self.swapped else branch)})"

    def factored(self) -> str:
        """Product form in the input's coordinates, e.g. ``x*y*(y^2 - x^3)``."""
        x_order, y_order = (self.n, self.m) if self.swapped else (self.m, self.n)
        parts: list[str] = []
        if x_order:
            parts.append("x" if x_order == 1 else f"x^{x_order}")
        if y_order:
            parts.append("y" if y_order == 1 else f"y^{y_order}")
        parts.extend(self.branch_text(lam) for lam in self.lambdas)
        body = "*".join(parts)
        if not body:
            return format_poly(BiPoly.constant(self.mu, self.field))
        negative, magnitude = signed_coefficient(self.mu)
        return ("-" if negative else "") + (f"{magnitude}*{body}" if magnitude else body)

    def __str__(self) -> str:
        lambdas = ", ".join(format_scalar(lam) for lam in self.lambdas)
        return (
            f"mu={format_scalar(self.mu)}, m={self.m}, n={self.n}, (p,q)=({self.p},{self.q}), "
            f"lambdas=[{lambdas}], swapped={'yes' if self.swapped else 'no'}"
        )


class CommodeFactorization(NamedTuple):
    """``P0 = mu * prod(y^p - lambda * x^q)``."""

    mu: Scalar
    p: int
    q: int
    lambdas: tuple[Scalar, ...]


def decompose_monomial_part(P: BiPoly) -> tuple[int, int, BiPoly]:
    """Split ``P = x^m * y^n * P0`` with ``P0`` commode.

    Raises:
        ZeroPolynomialError: If ``P`` is zero.
        NotQuasiHomogeneousError: If ``P`` is not quasi-homogeneous.
    """
    require_weights(P)
    m, n = orders(P)
    return m, n, P.divide_monomial(m, n)


def _clean(z: complex, tol: float) -> complex:
    scale = tol * max(1.0, abs(z))
    re = 0.0 if abs(z.real) <= scale else z.real
    im = 0.0 if abs(z.imag) <= scale else z.imag
    return complex(re, im)


def factor_commode(P0: BiPoly) -> CommodeFactorization:
    """Factor a commode quasi-homogeneous polynomial into weighted branches.

    The lambdas are the roots of ``g(z) = sum a_{q(k-j), pj} z^j``.

    Raises:
        NonCommodeError: If ``P0`` is constant or divisible by ``x`` or ``y``.
        NotQuasiHomogeneousError: If ``P0`` is not quasi-homogeneous.
        IrreducibleFactorError: In exact mode, if ``g`` does not split.
        RootSolverError: In float mode, if the solver does not converge.
    """
    if orders(P0) != (0, 0):
        raise NonCommodeError(f"{P0} is divisible by x or y")
    if P0.is_constant:
        raise NonCommodeError("a constant has no commode factorisation")
    weights = require_weights(P0)
    p, q = weights.a, weights.b
    k = weights.d // (p * q)
    # coefficients of g, highest degree first
    g = [P0.coefficient(q * (k - j), p * j) for j in range(k, -1, -1)]
    mu = g[0]
    if P0.field.is_exact:
        exact = [c for c in g if isinstance(c, GaussianRational)]
        assert len(exact) == len(g)
        lambdas: list[Scalar] = list(gaussian_rational_roots(exact))
    else:
        roots = aberth_roots([c.to_complex() for c in g])
        tol = P0.field.tol
        lambdas = [FloatComplex(_clean(complex(z), tol), tol) for z in roots]
    logger.debug("factored %s as (p,q)=(%d,%d) with %d branches", P0, p, q, len(lambdas))
    return CommodeFactorization(mu, p, q, tuple(sorted(lambdas, key=scalar_sort_key)))


def normal_form(P: BiPoly) -> NormalForm:
    """The unique decomposition of a quasi-homogeneous polynomial.

    When the weights come out with ``p > q`` the variables are exchanged and the
    result is flagged ``swapped``.

    Raises:
        ZeroPolynomialError: If ``P`` is zero.
        NotQuasiHomogeneousError: If ``P`` is not quasi-homogeneous.
        IrreducibleFactorError: In exact mode, if the commode part does not split.
        RootSolverError: In float mode, if the solver does not converge.
    """
    m, n, P0 = decompose_monomial_part(P)
    if P0.is_constant:
        return NormalForm(P0.constant_term(), m, n, 1, 1, (), False, P.field)
    factorization = factor_commode(P0)
    if factorization.p > factorization.q:
        swapped = normal_form(P.swap())
        return NormalForm(
            swapped.mu, swapped.m, swapped.n, swapped.p, swapped.q, swapped.lambdas, True, P.field
        )
    mu, p, q, lambdas = factorization
    return NormalForm(mu, m, n, p, q, lambdas, False, P.field)
