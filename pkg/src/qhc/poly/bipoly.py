"""Sparse bivariate polynomials over a coefficient field."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from qhc.poly.scalar import EXACT, Field, FloatComplex, GaussianRational, Number, Scalar

Exponent = tuple[int, int]

_CONSTANT_TYPES = (int, Fraction, float, complex, GaussianRational, FloatComplex)


class ZeroPolynomialError(ValueError):
    """Raised when an analysis entry point receives the zero polynomial."""


@dataclass(frozen=True, eq=False)
class BiPoly:
    """Polynomial in ``x`` and ``y`` stored as a map from exponent pair to coefficient.

    Coefficients are converted into ``field`` on construction and zero
    coefficients are pruned, so no stored coefficient is ever zero.
    """

    terms: Mapping[Exponent, Scalar]
    field: Field = EXACT

    def __post_init__(self) -> None:
        cleaned: dict[Exponent, Scalar] = {}
        for (i, j), coefficient in self.terms.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            value = self.field(coefficient)
            if not value.is_zero():
                cleaned[(i, j)] = value
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    @classmethod
    def constant(cls, value: Number, field: Field = EXACT) -> BiPoly:
        return cls({(0, 0): field(value)}, field)

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: Number = 1, field: Field = EXACT) -> BiPoly:
        return cls({(i, j): field(coefficient)}, field)

    @classmethod
    def x(cls, field: Field = EXACT) -> BiPoly:
        return cls.monomial(1, 0, 1, field)

    @classmethod
    def y(cls, field: Field = EXACT) -> BiPoly:
        return cls.monomial(0, 1, 1, field)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def coefficient(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), self.field.zero)

    def constant_term(self) -> Scalar:
        return self.coefficient(0, 0)

    def exponents(self) -> list[Exponent]:
        """Exponent pairs in ascending order."""
        return sorted(self.terms)

    def _coerce(self, other: object) -> BiPoly | None:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, _CONSTANT_TYPES):
            return BiPoly.constant(other, self.field)
        return None

    def __add__(self, other: object) -> BiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        total = dict(self.terms)
        for e, c in o.terms.items():
            total[e] = total[e] + c if e in total else c
        return BiPoly(total, self.field)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other: object) -> BiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> BiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> BiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        product: dict[Exponent, Scalar] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                e = (i1 + i2, j1 + j2)
                product[e] = product[e] + c1 * c2 if e in product else c1 * c2
        return BiPoly(product, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BiPoly:
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Number) -> BiPoly:
        f = self.field(factor)
        return BiPoly({e: f * c for e, c in self.terms.items()}, self.field)

    def swap(self) -> BiPoly:
        """Exchange the roles of ``x`` and ``y``."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()}, self.field)

    def divide_monomial(self, m: int, n: int) -> BiPoly:
        """Exact quotient by ``x^m * y^n``.

        Raises:
            ValueError: If ``x^m * y^n`` does not divide the polynomial.
        """
        if any(i < m or j < n for i, j in self.terms):
            raise ValueError(f"x^{m}*y^{n} does not divide the polynomial")
        return BiPoly({(i - m, j - n): c for (i, j), c in self.terms.items()}, self.field)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        exponents = set(self.terms) | set(o.terms)
        return all(self.coefficient(*e) == o.coefficient(*e) for e in exponents)

    def __str__(self) -> str:
        from qhc.poly.grammar import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r}, mode={self.field.mode.value})"


def orders(P: BiPoly) -> tuple[int, int]:
    """Orders of ``P`` in ``x`` and ``y``: the largest ``m, n`` with ``x^m*y^n | P``.

    Raises:
        ZeroPolynomialError: If ``P`` is zero.
    """
    if P.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no orders")
    return min(i for i, _ in P.terms), min(j for _, j in P.terms)


def _powers(base: BiPoly, top: int) -> list[BiPoly]:
    powers = [BiPoly.constant(1, base.field)]
    for _ in range(top):
        powers.append(powers[-1] * base)
    return powers


def substitute(P: BiPoly, x_expr: BiPoly, y_expr: BiPoly) -> BiPoly:
    """Expand ``P(x_expr, y_expr)``."""
    if P.is_zero:
        return P
    x_powers = _powers(x_expr, max(i for i, _ in P.terms))
    y_powers = _powers(y_expr, max(j for _, j in P.terms))
    total: dict[Exponent, Scalar] = {}
    for (i, j), coefficient in P.terms.items():
        for e, c in (x_powers[i] * y_powers[j]).terms.items():
            contribution = coefficient * c
            total[e] = total[e] + contribution if e in total else contribution
    return BiPoly(total, P.field)


def scalar_proportional(P: BiPoly, Q: BiPoly) -> Scalar | None:
    """Return ``alpha`` with ``P = alpha * Q``, or ``None`` if there is none.

    Two zero polynomials are proportional with ``alpha = 1``.
    """
    if P.is_zero and Q.is_zero:
        return P.field.one
    if P.is_zero or Q.is_zero:
        return None
    if P.field.is_exact and set(P.terms) != set(Q.terms):
        return None
    pivot = max(Q.terms, key=lambda e: abs(Q.terms[e].to_complex()))
    alpha = P.coefficient(*pivot) / Q.terms[pivot]
    if isinstance(alpha, FloatComplex) and alpha.is_zero():
        return None
    exponents = set(P.terms) | set(Q.terms)
    if all(P.coefficient(*e) == alpha * Q.coefficient(*e) for e in exponents):
        return alpha
    return None
