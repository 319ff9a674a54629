"""Point configurations on P^1, C and C*: the moduli datum of a curve."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from qhc.poly.scalar import EXACT, Field, Number, PointP1, Scalar


class ConfigurationError(ValueError):
    """Raised for invalid configurations or mismatched configuration pairs."""


class Space(str, Enum):
    """Space a configuration lives in, each with its own acting group."""

    P1 = "P1"  # PSL(2,C)
    AFF = "AFF"  # Aff(C)
    STAR = "STAR"  # GL(1,C)

    @property
    def display(self) -> str:
        return {"P1": "P^1", "AFF": "C", "STAR": "C*"}[self.value]

    @property
    def group(self) -> str:
        return {"P1": "PSL(2,C)", "AFF": "Aff(C)", "STAR": "GL(1,C)"}[self.value]


def _as_point(point: PointP1 | Number, field: Field) -> PointP1:
    if isinstance(point, PointP1):
        return point if point.is_infinity else PointP1(field(point.value))
    return PointP1(field(point))


def _separated(a: PointP1, b: PointP1, field: Field) -> bool:
    if a.is_infinity or b.is_infinity:
        return not (a.is_infinity and b.is_infinity)
    if field.is_exact:
        return a != b
    u, v = a.value.to_complex(), b.value.to_complex()
    return abs(u - v) > 2 * field.tol * max(1.0, abs(u), abs(v))


@dataclass(frozen=True, eq=False)
class Configuration:
    """A finite set of pairwise distinct points in ``space``, listed in canonical order.

    Points are stored as :class:`PointP1`; only ``P1`` configurations may contain
    infinity and ``STAR`` configurations exclude zero.
    """

    space: Space
    points: tuple[PointP1, ...]
    field: Field = EXACT

    def __post_init__(self) -> None:
        points = tuple(_as_point(p, self.field) for p in self.points)
        for point in points:
            if point.is_infinity and self.space is not Space.P1:
                raise ConfigurationError(f"∞ is not a point of {self.space.display}")
            if self.space is Space.STAR and point.value.is_zero():
                raise ConfigurationError("0 is not a point of C*")
        for a, b in combinations(points, 2):
            if not _separated(a, b, self.field):
                raise ConfigurationError(f"repeated point {a} in configuration")
        object.__setattr__(self, "points", tuple(sorted(points, key=PointP1.sort_key)))

    @classmethod
    def of(
        cls, space: Space, points: Iterable[PointP1 | Number], field: Field = EXACT
    ) -> Configuration:
        """Build a configuration from points, scalars or plain numbers."""
        return cls(space, tuple(_as_point(p, field) for p in points), field)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def values(self) -> tuple[Scalar, ...]:
        """Finite coordinates of the points.

        Raises:
            ValueError: If the configuration contains infinity.
        """
        return tuple(p.value for p in self.points)

    def min_separation(self) -> float | None:
        """Smallest distance between two finite points, or ``None`` with fewer than two."""
        finite = [p.value.to_complex() for p in self.points if not p.is_infinity]
        if len(finite) < 2:
            return None
        return min(abs(a - b) for a, b in combinations(finite, 2))

    def same_points(self, others: Iterable[PointP1]) -> bool:
        """Whether ``others`` is this configuration as a set.

        Exact mode compares multisets; float mode sorts both sides and matches
        greedily within tolerance.
        """
        candidates = list(others)
        if len(candidates) != len(self.points):
            return False
        if self.field.is_exact:
            return Counter(candidates) == Counter(self.points)
        unmatched = sorted(candidates, key=PointP1.sort_key)
        for point in self.points:
            for index, candidate in enumerate(unmatched):
                if point == candidate:
                    del unmatched[index]
                    break
            else:
                return False
        return True

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.points) + "}"


def require_same_size(A: Configuration, B: Configuration) -> None:
    """Check that two configurations can be compared.

    Raises:
        ConfigurationError: If the two configurations differ in size or space.
    """
    if A.space is not B.space:
        raise ConfigurationError(f"cannot compare {A.space.display} with {B.space.display}")
    if len(A) != len(B):
        raise ConfigurationError(f"size mismatch: {len(A)} points vs {len(B)} points")
