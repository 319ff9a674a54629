"""The groups acting on configurations: PSL(2,C) on P^1, Aff(C) on C, GL(1,C) on C*.

Each element also knows the plane substitution that realizes it on curves, so a
configuration map can be turned into a coordinate change between two curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from qhc.moduli.configuration import Configuration, ConfigurationError
from qhc.poly.bipoly import BiPoly
from qhc.poly.roots import exact_pth_root
from qhc.poly.scalar import (
    EXACT,
    Field,
    FloatComplex,
    GaussianRational,
    PointP1,
    Scalar,
    field_of,
    format_scalar,
)

PlaneMap = tuple[BiPoly, BiPoly]


def _paren(value: Scalar) -> str:
    text = format_scalar(value)
    if any(sign in text for sign in "+-/"):
        return f"({text})"
    return text


@dataclass(frozen=True, eq=False)
class Mobius:
    """``z -> (a*z + b) / (c*z + d)``, stored as a matrix up to a common factor."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self) -> None:
        if (self.a * self.d - self.b * self.c).is_zero():
            raise ValueError("degenerate Möbius matrix")

    @property
    def field(self) -> Field:
        return field_of(self.a)

    @classmethod
    def identity(cls, field: Field = EXACT) -> Mobius:
        return cls(field.one, field.zero, field.zero, field.one)

    def apply(self, point: PointP1) -> PointP1:
        u, v = point.homogeneous(self.field)
        return PointP1.from_homogeneous(self.a * u + self.b * v, self.c * u + self.d * v)

    def compose(self, other: Mobius) -> Mobius:
        """``self`` after ``other``."""
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> Mobius:
        return Mobius(self.d, -self.b, -self.c, self.a)

    def act(self, configuration: Configuration) -> Configuration:
        images = tuple(self.apply(point) for point in configuration.points)
        return Configuration(configuration.space, images, configuration.field)

    def plane_map(self, p: int = 1, q: int = 1) -> PlaneMap:
        """``T(x, y) = (d*x + c*y, b*x + a*y)``, linear on the tangent directions ``y/x``."""
        field = self.field
        x, y = BiPoly.x(field), BiPoly.y(field)
        return (x.scale(self.d) + y.scale(self.c), x.scale(self.b) + y.scale(self.a))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mobius):
            return NotImplemented
        mine = (self.a, self.b, self.c, self.d)
        theirs = (other.a, other.b, other.c, other.d)
        return all(
            (mine[i] * theirs[j] - mine[j] * theirs[i]).is_zero()
            for i, j in combinations(range(4), 2)
        )

    def __str__(self) -> str:
        a, b, c, d = (_paren(v) for v in (self.a, self.b, self.c, self.d))
        return f"z -> ({a}*z + {b})/({c}*z + {d})"


@dataclass(frozen=True, eq=False)
class Affine:
    """``z -> a*z + b`` with ``a != 0``."""

    a: Scalar
    b: Scalar

    def __post_init__(self) -> None:
        if self.a.is_zero():
            raise ValueError("affine map with zero linear part")

    @property
    def field(self) -> Field:
        return field_of(self.a)

    @classmethod
    def identity(cls, field: Field = EXACT) -> Affine:
        return cls(field.one, field.zero)

    def apply(self, point: PointP1) -> PointP1:
        if point.is_infinity:
            return point
        return PointP1(self.a * point.value + self.b)

    def compose(self, other: Affine) -> Affine:
        """``self`` after ``other``."""
        return Affine(self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> Affine:
        return Affine(1 / self.a, -self.b / self.a)

    def act(self, configuration: Configuration) -> Configuration:
        images = tuple(self.apply(point) for point in configuration.points)
        return Configuration(configuration.space, images, configuration.field)

    def plane_map(self, p: int = 1, q: int = 1) -> PlaneMap:
        """``T(x, y) = (x, a*y + b*x^q)``."""
        field = self.field
        x, y = BiPoly.x(field), BiPoly.y(field)
        return (x, y.scale(self.a) + BiPoly.monomial(q, 0, self.b, field))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Affine):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __str__(self) -> str:
        return f"z -> {_paren(self.a)}*z + {_paren(self.b)}"


@dataclass(frozen=True, eq=False)
class Scaling:
    """``z -> a*z`` with ``a != 0``."""

    a: Scalar

    def __post_init__(self) -> None:
        if self.a.is_zero():
            raise ValueError("scaling by zero")

    @property
    def field(self) -> Field:
        return field_of(self.a)

    @classmethod
    def identity(cls, field: Field = EXACT) -> Scaling:
        return cls(field.one)

    def apply(self, point: PointP1) -> PointP1:
        if point.is_infinity:
            return point
        return PointP1(self.a * point.value)

    def compose(self, other: Scaling) -> Scaling:
        return Scaling(self.a * other.a)

    def inverse(self) -> Scaling:
        return Scaling(1 / self.a)

    def act(self, configuration: Configuration) -> Configuration:
        images = tuple(self.apply(point) for point in configuration.points)
        return Configuration(configuration.space, images, configuration.field)

    def root(self, p: int) -> Scalar | None:
        """A ``p``-th root of ``a``: exact when one exists, principal in float mode."""
        if isinstance(self.a, FloatComplex):
            return FloatComplex(self.a.value ** (1.0 / p), self.a.tol)
        assert isinstance(self.a, GaussianRational)
        return exact_pth_root(self.a, p)

    def plane_map(self, p: int = 1, q: int = 1) -> PlaneMap:
        """``T(x, y) = (x, a^(1/p)*y)``.

        Without an exact ``p``-th root the weighted scaling ``(a^s*x, a^t*y)`` with
        ``t*p - s*q = 1`` is used instead; it acts on the branches the same way.
        """
        field = self.field
        x, y = BiPoly.x(field), BiPoly.y(field)
        root = self.root(p)
        if root is not None:
            return (x, y.scale(root))
        t = pow(p, -1, q)
        s = (t * p - 1) // q
        return (x.scale(self.a**s), y.scale(self.a**t))

    def root_text(self, p: int) -> str:
        """The unevaluated root ``a^(1/p)``."""
        return f"{_paren(self.a)}^(1/{p})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scaling):
            return NotImplemented
        return self.a == other.a

    def __str__(self) -> str:
        return f"z -> {_paren(self.a)}*z"


GroupElement = Mobius | Affine | Scaling


def normalizing_map(a1: PointP1, a2: PointP1, a3: PointP1, field: Field) -> Mobius:
    """The Möbius map sending ``(a1, a2, a3)`` to ``(0, 1, ∞)``."""
    one, zero = field.one, field.zero
    if a1.is_infinity:
        return Mobius(zero, a2.value - a3.value, one, -a3.value)
    if a2.is_infinity:
        return Mobius(one, -a1.value, one, -a3.value)
    if a3.is_infinity:
        return Mobius(one, -a1.value, zero, a2.value - a1.value)
    u1, u2, u3 = a1.value, a2.value, a3.value
    return Mobius(u2 - u3, -u1 * (u2 - u3), u2 - u1, -u3 * (u2 - u1))


def _check_distinct(triple: tuple[PointP1, PointP1, PointP1]) -> None:
    for u, v in combinations(triple, 2):
        if u == v:
            raise ConfigurationError(f"repeated point {u} in triple")


def mobius_from_triples(
    a1: PointP1,
    a2: PointP1,
    a3: PointP1,
    b1: PointP1,
    b2: PointP1,
    b3: PointP1,
    field: Field = EXACT,
) -> Mobius:
    """The unique Möbius map with ``a_i -> b_i``.

    Raises:
        ConfigurationError: If a triple repeats a point.
    """
    _check_distinct((a1, a2, a3))
    _check_distinct((b1, b2, b3))
    to_standard = normalizing_map(a1, a2, a3, field)
    from_standard = normalizing_map(b1, b2, b3, field).inverse()
    return from_standard.compose(to_standard)
