"""Coefficient scalars: exact Gaussian rationals and tolerant complex floats.

Every polynomial coefficient, normal-form constant and configuration point is a
``Scalar``. Exact mode is the default; float mode is an explicit opt-in for curves
whose commode part does not split over the Gaussian rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

DEFAULT_TOL = 1e-9


class Mode(str, Enum):
    """Arithmetic mode of a computation."""

    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @property
    def mode(self) -> Mode:
        return Mode.EXACT

    @staticmethod
    def _coerce(other: object) -> GaussianRational | None:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other))
        return None

    def __add__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other: object) -> GaussianRational:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int) -> GaussianRational:
        if exponent < 0:
            return (GaussianRational(1) / self) ** (-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        return format_scalar(self)

    def norm(self) -> Fraction:
        """Squared absolute value."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


@dataclass(frozen=True, eq=False)
class FloatComplex:
    """Double-precision complex number compared with a relative tolerance.

    Two values are equal when ``|a - b| <= tol * max(1, |a|, |b|)``. The relation is
    not transitive, so float scalars are deliberately unhashable.
    """

    value: complex
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", complex(self.value))

    @property
    def mode(self) -> Mode:
        return Mode.FLOAT

    @staticmethod
    def _coerce(other: object) -> complex | None:
        if isinstance(other, FloatComplex):
            return other.value
        if isinstance(other, GaussianRational):
            return other.to_complex()
        if isinstance(other, (int, float, complex, Fraction)):
            return complex(other)
        return None

    def _wrap(self, value: complex) -> FloatComplex:
        return FloatComplex(value, self.tol)

    def __add__(self, other: object) -> FloatComplex:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other: object) -> FloatComplex:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.value - o)

    def __rsub__(self, other: object) -> FloatComplex:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(o - self.value)

    def __mul__(self, other: object) -> FloatComplex:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FloatComplex:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division by zero complex float")
        return self._wrap(self.value / o)

    def __rtruediv__(self, other: object) -> FloatComplex:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError("division by zero complex float")
        return self._wrap(o / self.value)

    def __neg__(self) -> FloatComplex:
        return self._wrap(-self.value)

    def __pow__(self, exponent: int | float) -> FloatComplex:
        return self._wrap(self.value**exponent)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        scale = max(1.0, abs(self.value), abs(o))
        return abs(self.value - o) <= self.tol * scale

    def __str__(self) -> str:
        return format_scalar(self)

    def __abs__(self) -> float:
        return abs(self.value)

    def is_zero(self) -> bool:
        return abs(self.value) <= self.tol

    def is_real(self) -> bool:
        return abs(self.value.imag) <= self.tol * max(1.0, abs(self.value))

    def to_complex(self) -> complex:
        return self.value


Scalar = GaussianRational | FloatComplex
Number = int | Fraction | float | complex | GaussianRational | FloatComplex


@dataclass(frozen=True)
class Field:
    """Coefficient field of a computation: a mode plus the float tolerance."""

    mode: Mode = Mode.EXACT
    tol: float = DEFAULT_TOL

    @property
    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    def __call__(self, value: Number) -> Scalar:
        """Convert ``value`` into a scalar of this field.

        Raises:
            TypeError: If an inexact value is given to the exact field.
        """
        if self.is_exact:
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, (int, Fraction)):
                return GaussianRational(Fraction(value))
            raise TypeError(f"cannot represent {value!r} exactly")
        if isinstance(value, FloatComplex):
            return value if value.tol == self.tol else FloatComplex(value.value, self.tol)
        if isinstance(value, GaussianRational):
            return FloatComplex(value.to_complex(), self.tol)
        return FloatComplex(complex(value), self.tol)

    def gaussian(self, re: int | Fraction, im: int | Fraction = 0) -> Scalar:
        """Build ``re + im*i`` in this field."""
        return self(GaussianRational(Fraction(re), Fraction(im)))

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    @property
    def i(self) -> Scalar:
        return self.gaussian(0, 1)


EXACT = Field()


def field_of(value: Scalar) -> Field:
    """The field a scalar lives in."""
    if isinstance(value, FloatComplex):
        return Field(Mode.FLOAT, value.tol)
    return EXACT


def scalar_sort_key(value: Scalar) -> tuple[Fraction, Fraction] | tuple[float, float]:
    """Total order used for canonical listings: real part, then imaginary part."""
    if isinstance(value, GaussianRational):
        return (value.re, value.im)
    return (value.value.real, value.value.imag)


def _imaginary_text(magnitude: str) -> str:
    return "i" if magnitude in ("1", "1.0") else f"{magnitude}i"


def format_scalar(value: Scalar) -> str:
    """Plain text of a scalar, e.g. ``3``, ``-1/2``, ``2i``, ``1/2-i``."""
    if isinstance(value, GaussianRational):
        re, im = value.re, value.im
        re_text, im_text = str(re), str(abs(im))
    else:
        re, im = value.value.real, value.value.imag
        re_text, im_text = repr(re), repr(abs(im))
    if im == 0:
        return re_text
    sign = "-" if im < 0 else "+"
    if re == 0:
        return ("-" if im < 0 else "") + _imaginary_text(im_text)
    return f"{re_text}{sign}{_imaginary_text(im_text)}"


@dataclass(frozen=True, eq=False)
class PointP1:
    """Point of the projective line: a finite scalar or the tagged point at infinity."""

    finite: Scalar | None = None

    @property
    def is_infinity(self) -> bool:
        return self.finite is None

    @property
    def value(self) -> Scalar:
        """The finite coordinate.

        Raises:
            ValueError: For the point at infinity.
        """
        if self.finite is None:
            raise ValueError("the point at infinity has no finite coordinate")
        return self.finite

    def homogeneous(self, field: Field) -> tuple[Scalar, Scalar]:
        """Homogeneous coordinates ``[u:v]``; infinity is ``[1:0]``."""
        if self.finite is None:
            return field.one, field.zero
        return self.finite, field.one

    @classmethod
    def from_homogeneous(cls, u: Scalar, v: Scalar) -> PointP1:
        if v.is_zero():
            if u.is_zero():
                raise ValueError("[0:0] is not a point of the projective line")
            return INFINITY
        return cls(u / v)

    def sort_key(self) -> tuple[object, ...]:
        if self.finite is None:
            return (1,)
        return (0, *scalar_sort_key(self.finite))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointP1):
            return NotImplemented
        if self.finite is None or other.finite is None:
            return self.finite is None and other.finite is None
        return self.finite == other.finite

    def __hash__(self) -> int:
        return hash("inf") if self.finite is None else hash(self.finite)

    def __str__(self) -> str:
        return "∞" if self.finite is None else format_scalar(self.finite)


INFINITY = PointP1()
