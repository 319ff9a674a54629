"""Detection of quasi-homogeneous weights."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from qhc.poly.bipoly import BiPoly, ZeroPolynomialError


class NotQuasiHomogeneousError(ValueError):
    """Raised when no positive weights put every term on one weighted-degree line."""


@dataclass(frozen=True)
class Weights:
    """Weights ``a`` of ``x`` and ``b`` of ``y`` with weighted degree ``d``."""

    a: int
    b: int
    d: int

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.d})"


def detect_weights(P: BiPoly) -> Weights | None:
    """Coprime weights ``(a, b, d)`` with ``a*i + b*j = d`` for every term of ``P``.

    A monomial gets the convention ``(1, 1, i + j)``. Returns ``None`` when the
    exponents lie on no line of negative slope.

    Raises:
        ZeroPolynomialError: If ``P`` is zero.
    """
    if P.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no weights")
    exponents = P.exponents()
    (i0, j0), rest = exponents[0], exponents[1:]
    if not rest:
        return Weights(1, 1, i0 + j0)
    i1, j1 = rest[0]
    di, dj = i1 - i0, j1 - j0
    if di == 0 or dj == 0 or (di > 0) == (dj > 0):
        return None
    g = gcd(di, dj)
    a, b = abs(dj) // g, abs(di) // g
    d = a * i0 + b * j0
    if any(a * i + b * j != d for i, j in rest):
        return None
    return Weights(a, b, d)


def require_weights(P: BiPoly) -> Weights:
    """Like :func:`detect_weights` but raises when ``P`` is not quasi-homogeneous.

    Raises:
        ZeroPolynomialError: If ``P`` is zero.
        NotQuasiHomogeneousError: If no admissible weights exist.
    """
    weights = detect_weights(P)
    if weights is None:
        raise NotQuasiHomogeneousError(f"{P} is not quasi-homogeneous")
    return weights
