"""Canonical keys: one string per group orbit of configurations."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import permutations

from qhc.moduli.configuration import Configuration, Space
from qhc.moduli.groups import normalizing_map
from qhc.poly.scalar import Scalar, format_scalar, scalar_sort_key

_P1_FRAME = ("0", "1", "∞")


def _sorted_values(values: Sequence[Scalar]) -> list[Scalar]:
    return sorted(values, key=scalar_sort_key)


def _order_key(values: Sequence[Scalar]) -> tuple[object, ...]:
    return tuple(scalar_sort_key(v) for v in values)


def _render(prefix: Sequence[str], values: Sequence[Scalar]) -> str:
    return "[" + ",".join([*prefix, *(format_scalar(v) for v in values)]) + "]"


def _p1_key(C: Configuration) -> str:
    if len(C) < 3:
        return _render(_P1_FRAME[: len(C)], [])
    best: list[Scalar] | None = None
    for triple in permutations(range(len(C)), 3):
        a1, a2, a3 = (C.points[i] for i in triple)
        normalizer = normalizing_map(a1, a2, a3, C.field)
        rest = _sorted_values(
            [normalizer.apply(p).value for i, p in enumerate(C.points) if i not in triple]
        )
        if best is None or _order_key(rest) < _order_key(best):
            best = rest
    assert best is not None
    return _render(_P1_FRAME, best)


def _aff_key(C: Configuration) -> str:
    values = C.values
    if len(values) < 2:
        return _render(("0",) * len(values), [])
    best: list[Scalar] | None = None
    for i, j in permutations(range(len(values)), 2):
        shift, unit = values[i], values[j] - values[i]
        rest = _sorted_values(
            [(v - shift) / unit for k, v in enumerate(values) if k not in (i, j)]
        )
        if best is None or _order_key(rest) < _order_key(best):
            best = rest
    assert best is not None
    return _render(("0", "1"), best)


def _star_key(C: Configuration) -> str:
    values = C.values
    best: list[Scalar] | None = None
    for pivot in values:
        scaled = _sorted_values([v / pivot for v in values])
        if best is None or _order_key(scaled) < _order_key(best):
            best = scaled
    return _render((), best or [])


def canonical_key(C: Configuration) -> str:
    """A text that two configurations share exactly when they are equivalent.

    ``P1`` configurations send an ordered triple to ``(0, 1, ∞)``, ``C`` ones an
    ordered pair to ``(0, 1)`` and ``C*`` ones a point to ``1``; the key is the
    lexicographically smallest sorted remainder over all choices. Only exact-mode
    keys are canonical.
    """
    if C.space is Space.P1:
        return _p1_key(C)
    if C.space is Space.AFF:
        return _aff_key(C)
    return _star_key(C)
