"""All-roots solving for univariate polynomials.

Float roots come from a vectorised Aberth iteration. Exact roots come from an
exact factorisation over ``Q(i)``: a polynomial splits exactly when every
irreducible factor is linear.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import sympy

from qhc.poly.scalar import GaussianRational, format_scalar

logger = logging.getLogger(__name__)

_z = sympy.Symbol("z")


class RootSolverError(RuntimeError):
    """Raised when the float all-roots solver fails its residual check."""


class IrreducibleFactorError(ValueError):
    """Raised when a polynomial does not split over the Gaussian rationals.

    Attributes:
        coefficients: The offending polynomial, highest degree first.
    """

    def __init__(self, coefficients: Sequence[GaussianRational]) -> None:
        self.coefficients = tuple(coefficients)
        rendered = " ".join(
            f"({format_scalar(c)})z^{len(coefficients) - 1 - k}" for k, c in enumerate(coefficients)
        )
        super().__init__(
            f"g(z) = {rendered} does not split into linear factors over the Gaussian "
            "rationals; rerun with --mode float"
        )


def aberth_roots(
    coefficients: Sequence[complex], *, tol: float = 1e-14, max_iter: int = 500
) -> np.ndarray:
    """All complex roots of a polynomial, highest degree coefficient first.

    Raises:
        RootSolverError: If the iteration does not reach a small residual.
    """
    c = np.trim_zeros(np.asarray(coefficients, dtype=np.complex128), "f")
    degree = c.size - 1
    if degree < 1:
        return np.empty(0, dtype=np.complex128)
    c = c / c[0]
    if degree == 1:
        return np.array([-c[1]])
    derivative = c[:-1] * np.arange(degree, 0, -1)

    # Cauchy bound for the initial circle, rotated off the real axis
    radius = 1.0 + float(np.max(np.abs(c[1:])))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(degree) / degree + 0.4))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for iteration in range(max_iter):
            value = np.polyval(c, z)
            slope = np.polyval(derivative, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            repulsion = (1.0 / diff).sum(axis=1) - 1.0
            ratio = value / slope
            delta = np.where(value == 0, 0, ratio / (1.0 - ratio * repulsion))
            delta = np.where(np.isfinite(delta), delta, 0)
            z = z - delta
            if np.all(np.abs(delta) <= tol * np.maximum(1.0, np.abs(z))):
                logger.debug("aberth converged after %d iterations", iteration + 1)
                break

    scale = np.polyval(np.abs(c), np.abs(z))
    residual = np.abs(np.polyval(c, z)) / np.maximum(scale, 1.0)
    if not np.all(np.isfinite(z)) or np.max(residual) > 1e-8:
        raise RootSolverError(
            f"root solver did not converge (residual {float(np.max(residual)):.3g})"
        )
    return z[np.lexsort((z.imag, z.real))]


def _to_sympy(c: GaussianRational) -> sympy.Expr:
    re = sympy.Rational(c.re.numerator, c.re.denominator)
    im = sympy.Rational(c.im.numerator, c.im.denominator)
    return re + sympy.I * im


def _fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _from_sympy(value: sympy.Expr) -> GaussianRational:
    re, im = sympy.expand_complex(value).as_real_imag()
    return GaussianRational(_fraction(re), _fraction(im))


def split_gaussian(
    coefficients: Sequence[GaussianRational],
) -> tuple[list[GaussianRational], int]:
    """Factor over ``Q(i)``: the roots of the linear factors, with multiplicity, and
    the total degree of the factors that do not split.

    Args:
        coefficients: Highest degree first; the leading coefficient must be nonzero.
    """
    degree = len(coefficients) - 1
    if degree < 1:
        return [], 0
    g = sympy.Add(*(_to_sympy(c) * _z ** (degree - k) for k, c in enumerate(coefficients)))
    _, factors = sympy.factor_list(g, _z, gaussian=True)
    roots: list[GaussianRational] = []
    unsplit = 0
    for factor, multiplicity in factors:
        psi = sympy.Poly(factor, _z)
        if psi.degree() == 1:
            lead, constant = psi.all_coeffs()
            root = _from_sympy(-constant / lead)
            logger.debug("exact root %s with multiplicity %d", root, multiplicity)
            roots.extend([root] * multiplicity)
        else:
            unsplit += psi.degree() * multiplicity
    return roots, unsplit


def gaussian_rational_roots(coefficients: Sequence[GaussianRational]) -> list[GaussianRational]:
    """All roots, with multiplicity, of a polynomial that splits over the Gaussian rationals.

    Args:
        coefficients: Highest degree first; the leading coefficient must be nonzero.

    Raises:
        IrreducibleFactorError: If some irreducible factor over ``Q(i)`` is not linear.
    """
    roots, unsplit = split_gaussian(coefficients)
    if unsplit:
        raise IrreducibleFactorError(coefficients)
    return roots


def exact_pth_root(a: GaussianRational, p: int) -> GaussianRational | None:
    """A Gaussian rational ``r`` with ``r**p == a``, preferring the principal branch."""
    if p == 1 or a.is_zero():
        return a
    coefficients = [GaussianRational(1)] + [GaussianRational(0)] * (p - 1) + [-a]
    roots, _ = split_gaussian(coefficients)
    if not roots:
        return None
    principal = a.to_complex() ** (1.0 / p)
    return min(roots, key=lambda r: abs(r.to_complex() - principal))
