"""Curve types (1,1,n), (1,q,n), (p,q,n) and their moduli configurations."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from qhc.moduli.configuration import Configuration, Space
from qhc.poly.bipoly import BiPoly
from qhc.poly.scalar import EXACT, INFINITY, Field, PointP1, Scalar
from qhc.quasihom.normal_form import NormalForm


class NonReducedError(ValueError):
    """Raised when a curve has a repeated factor and reduction was not requested."""


class CurveKind(str, Enum):
    """The three families of reduced quasi-homogeneous curves."""

    ONE_ONE = "(1,1,n)"
    ONE_Q = "(1,q,n)"
    P_Q = "(p,q,n)"

    @property
    def space(self) -> Space:
        return {
            CurveKind.ONE_ONE: Space.P1,
            CurveKind.ONE_Q: Space.AFF,
            CurveKind.P_Q: Space.STAR,
        }[self]


@dataclass(frozen=True, eq=False)
class CurveType:
    """Analytic type of a reduced curve together with its moduli configuration.

    For kind ``(1,1,n)`` both axes are folded into the configuration, so ``n``
    counts its points and ``m_parity`` is 0. For ``(1,q,n)`` the ``y`` axis folds
    in as the point 0. ``k_parity`` is only set for kind ``(p,q,n)``.
    """

    kind: CurveKind
    p: int
    q: int
    n: int
    m_parity: int
    k_parity: int | None
    configuration: Configuration

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.n)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.n})"


class Reduction(NamedTuple):
    """Squarefree part of a normal form and the repeated factors removed from it."""

    normal_form: NormalForm
    dropped: tuple[str, ...]


def _distinct(values: tuple[Scalar, ...]) -> list[Scalar]:
    kept: list[Scalar] = []
    for value in values:
        if not any(value == seen for seen in kept):
            kept.append(value)
    return kept


def check_reduced(nf: NormalForm) -> bool:
    """Whether the curve has no repeated factor."""
    return nf.m <= 1 and nf.n <= 1 and len(_distinct(nf.lambdas)) == len(nf.lambdas)


def reduce(nf: NormalForm) -> Reduction:
    """Replace every multiplicity by 1 and report what was dropped."""
    dropped: list[str] = []
    x_name, y_name = nf.axis_names()
    if nf.m > 1:
        dropped.append(x_name if nf.m == 2 else f"{x_name}^{nf.m - 1}")
    if nf.n > 1:
        dropped.append(y_name if nf.n == 2 else f"{y_name}^{nf.n - 1}")
    kept = _distinct(nf.lambdas)
    for lam in kept:
        extra = sum(1 for other in nf.lambdas if other == lam) - 1
        if extra:
            factor = nf.branch_text(lam)
            dropped.append(factor if extra == 1 else f"{factor}^{extra}")
    reduced = NormalForm(
        nf.mu, min(nf.m, 1), min(nf.n, 1), nf.p, nf.q, tuple(kept), nf.swapped, nf.field
    )
    return Reduction(reduced, tuple(dropped))


def classify_type(nf: NormalForm) -> CurveType:
    """Type triple, axis parities and configuration of a reduced curve.

    Raises:
        NonReducedError: If the curve has a repeated factor.
    """
    if not check_reduced(nf):
        raise NonReducedError(
            f"{nf.factored()} is not reduced (use --reduce to take its squarefree part)"
        )
    zero = PointP1(nf.field.zero)
    points = [PointP1(lam) for lam in nf.lambdas]
    if nf.p == 1 and nf.q == 1:
        if nf.m:
            points.append(INFINITY)
        if nf.n:
            points.append(zero)
        configuration = Configuration(Space.P1, tuple(points), nf.field)
        return CurveType(CurveKind.ONE_ONE, 1, 1, len(points), 0, None, configuration)
    if nf.p == 1:
        if nf.n:
            points.append(zero)
        configuration = Configuration(Space.AFF, tuple(points), nf.field)
        return CurveType(CurveKind.ONE_Q, 1, nf.q, len(points), nf.m, None, configuration)
    configuration = Configuration(Space.STAR, tuple(points), nf.field)
    return CurveType(CurveKind.P_Q, nf.p, nf.q, len(points), nf.m, nf.n, configuration)


def normal_form_from_configuration(
    configuration: Configuration,
    p: int = 1,
    q: int = 1,
    m_parity: int = 0,
    k_parity: int = 0,
    mu: Scalar | None = None,
) -> NormalForm:
    """The curve ``f_lambda`` whose moduli datum is ``configuration``.

    On ``P1`` the point at infinity becomes the ``x`` factor and 0 the ``y``
    factor; on ``C`` the point 0 becomes the ``y`` factor.
    """
    field = configuration.field
    mu = field.one if mu is None else mu
    lambdas: list[Scalar] = []
    m, n = m_parity, k_parity
    for point in configuration.points:
        if point.is_infinity:
            m = 1
        elif point.value.is_zero() and configuration.space is not Space.STAR:
            n = 1
        else:
            lambdas.append(point.value)
    if configuration.space is Space.P1:
        p, q = 1, 1
    elif configuration.space is Space.AFF:
        p = 1
    return NormalForm(mu, m, n, p, q, tuple(lambdas), False, field)


def curve_from_configuration(
    space: Space,
    points: Iterable[PointP1 | Scalar | int],
    p: int = 1,
    q: int = 1,
    m_parity: int = 0,
    k_parity: int = 0,
    field: Field = EXACT,
) -> BiPoly:
    """Expanded polynomial of the curve with moduli datum ``points`` in ``space``.

    Raises:
        ConfigurationError: If the points do not form a configuration of ``space``.
    """
    configuration = Configuration.of(space, points, field)
    return normal_form_from_configuration(
        configuration, p, q, m_parity, k_parity
    ).expand_normal_coordinates()
