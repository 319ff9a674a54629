"""Deciding whether two configurations lie in one group orbit.

Every search walks a fixed enumeration order and returns the first group element
that carries one point set onto the other.
"""

from __future__ import annotations

import logging
from itertools import permutations

from qhc.moduli.configuration import Configuration, Space, require_same_size
from qhc.moduli.groups import Affine, GroupElement, Mobius, Scaling, mobius_from_triples
from qhc.poly.scalar import INFINITY, Field, PointP1

logger = logging.getLogger(__name__)


def _padding(field: Field) -> list[PointP1]:
    return [PointP1(field.zero), PointP1(field.one), INFINITY] + [
        PointP1(field(k)) for k in range(2, 5)
    ]


def _complete_triple(points: tuple[PointP1, ...], field: Field) -> tuple[PointP1, ...]:
    """Extend at most three distinct points to three with points of ``0, 1, ∞, 2, ...``."""
    triple = list(points)
    for candidate in _padding(field):
        if len(triple) == 3:
            break
        if all(candidate != point for point in triple):
            triple.append(candidate)
    return tuple(triple)


def p1_equivalent(A: Configuration, B: Configuration) -> Mobius | None:
    """A Möbius map carrying ``A`` onto ``B``, or ``None``.

    Any two sets of at most three points are equivalent. Otherwise the first three
    points of ``A`` are sent to every ordered triple of ``B`` in turn.

    Raises:
        ConfigurationError: If the sizes or spaces differ.
    """
    require_same_size(A, B)
    field = A.field
    if len(A) <= 3:
        a1, a2, a3 = _complete_triple(A.points, field)
        b1, b2, b3 = _complete_triple(B.points, field)
        return mobius_from_triples(a1, a2, a3, b1, b2, b3, field)
    a1, a2, a3 = A.points[:3]
    for b1, b2, b3 in permutations(B.points, 3):
        candidate = mobius_from_triples(a1, a2, a3, b1, b2, b3, field)
        logger.debug("trying %s", candidate)
        if B.same_points(candidate.apply(point) for point in A.points):
            return candidate
    return None


def affine_equivalent(A: Configuration, B: Configuration) -> Affine | None:
    """An affine map ``z -> a*z + b`` carrying ``A`` onto ``B``, or ``None``.

    Raises:
        ConfigurationError: If the sizes or spaces differ.
    """
    require_same_size(A, B)
    field = A.field
    if len(A) == 0:
        return Affine.identity(field)
    if len(A) == 1:
        return Affine(field.one, B.values[0] - A.values[0])
    a0, a1 = A.values[:2]
    for bi, bj in permutations(B.values, 2):
        a = (bj - bi) / (a1 - a0)
        candidate = Affine(a, bi - a * a0)
        logger.debug("trying %s", candidate)
        if B.same_points(candidate.apply(point) for point in A.points):
            return candidate
    return None


def scaling_equivalent(A: Configuration, B: Configuration) -> Scaling | None:
    """A scaling ``z -> a*z`` carrying ``A`` onto ``B``, or ``None``.

    Raises:
        ConfigurationError: If the sizes or spaces differ.
    """
    require_same_size(A, B)
    field = A.field
    if len(A) == 0:
        return Scaling.identity(field)
    a0 = A.values[0]
    for b in B.values:
        candidate = Scaling(b / a0)
        logger.debug("trying %s", candidate)
        if B.same_points(candidate.apply(point) for point in A.points):
            return candidate
    return None


def configurations_equivalent(A: Configuration, B: Configuration) -> GroupElement | None:
    """Dispatch to the search for the group acting on the configurations' space.

    Raises:
        ConfigurationError: If the sizes or spaces differ.
    """
    if A.space is Space.P1:
        return p1_equivalent(A, B)
    if A.space is Space.AFF:
        return affine_equivalent(A, B)
    return scaling_equivalent(A, B)
