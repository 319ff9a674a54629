"""Analytic equivalence of two reduced quasi-homogeneous curves, with witnesses.

Two curves are compared invariant by invariant: the type triple, the axis
parities, then the configurations under the group of their family. A positive
answer carries a plane coordinate change ``T`` and a constant ``alpha`` with
``f_B(T(x, y)) = alpha * f_A(x, y)``, checked before it is returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from qhc.moduli.equivalence import configurations_equivalent
from qhc.moduli.groups import GroupElement, PlaneMap, Scaling
from qhc.poly.bipoly import scalar_proportional, substitute
from qhc.poly.grammar import format_poly
from qhc.poly.scalar import Scalar, format_scalar
from qhc.quasihom.classify import CurveType, classify_type
from qhc.quasihom.normal_form import NormalForm

logger = logging.getLogger(__name__)


class WitnessVerificationError(RuntimeError):
    """Raised when a constructed coordinate change fails its pullback check."""


class Failure(str, Enum):
    """The first invariant on which two curves differ."""

    TYPE = "type"
    PARITY = "parity"
    CONFIGURATION = "configuration"


@dataclass(frozen=True, eq=False)
class Witness:
    """Coordinate change ``T`` with ``f_B(T(x, y)) = alpha * f_A(x, y)``."""

    plane_map: PlaneMap
    alpha: Scalar
    group_element: GroupElement
    symbolic: str | None = None

    def __str__(self) -> str:
        x_image, y_image = (format_poly(c) for c in self.plane_map)
        return f"T(x,y) = ({x_image}, {y_image})"


@dataclass(frozen=True, eq=False)
class EquivalenceVerdict:
    """Outcome of :func:`compare_curves`."""

    type_a: CurveType
    type_b: CurveType
    witness: Witness | None = None
    failure: Failure | None = None
    reason: str = ""

    @property
    def equivalent(self) -> bool:
        return self.witness is not None


def _swap_variables(plane_map: PlaneMap) -> PlaneMap:
    return (plane_map[0].swap(), plane_map[1].swap())


def _undo_swaps(plane_map: PlaneMap, nf_a: NormalForm, nf_b: NormalForm) -> PlaneMap:
    """Turn a map between normal coordinates into one between the input coordinates."""
    if nf_a.swapped:
        plane_map = _swap_variables(plane_map)
    if nf_b.swapped:
        plane_map = (plane_map[1], plane_map[0])
    return plane_map


def _symbolic(element: Scaling, p: int, nf_a: NormalForm, nf_b: NormalForm) -> str | None:
    if element.root(p) is not None:
        return None
    x_name, y_name = ("y", "x") if nf_a.swapped else ("x", "y")
    components = [x_name, f"{element.root_text(p)}*{y_name}"]
    if nf_b.swapped:
        components.reverse()
    return f"T(x,y) = ({components[0]}, {components[1]})"


def _parity_failure(type_a: CurveType, type_b: CurveType) -> str | None:
    if type_a.m_parity != type_b.m_parity:
        return f"x-axis parity {type_a.m_parity} ≠ {type_b.m_parity}"
    if type_a.k_parity != type_b.k_parity:
        return f"y-axis parity {type_a.k_parity} ≠ {type_b.k_parity}"
    return None


def build_witness(nf_a: NormalForm, nf_b: NormalForm, element: GroupElement) -> Witness:
    """Realize a configuration map as a verified coordinate change between the curves.

    Raises:
        WitnessVerificationError: If the pullback is not proportional to ``f_A``.
    """
    plane_map = _undo_swaps(element.plane_map(nf_a.p, nf_a.q), nf_a, nf_b)
    f_a, f_b = nf_a.expand(), nf_b.expand()
    pulled_back = substitute(f_b, *plane_map)
    alpha = scalar_proportional(pulled_back, f_a)
    if alpha is None:
        raise WitnessVerificationError(
            f"pulling {f_b} back along {plane_map[0]}, {plane_map[1]} gives {pulled_back}, "
            f"not a multiple of {f_a}"
        )
    symbolic = _symbolic(element, nf_a.p, nf_a, nf_b) if isinstance(element, Scaling) else None
    logger.debug("witness %s with alpha=%s", plane_map, format_scalar(alpha))
    return Witness(plane_map, alpha, element, symbolic)


def compare_curves(nf_a: NormalForm, nf_b: NormalForm) -> EquivalenceVerdict:
    """Decide equivalence and report the witness or the first failing invariant.

    Raises:
        NonReducedError: If either curve is not reduced.
        WitnessVerificationError: If a witness fails its pullback check.
    """
    type_a, type_b = classify_type(nf_a), classify_type(nf_b)
    if (type_a.kind, type_a.triple) != (type_b.kind, type_b.triple):
        return EquivalenceVerdict(
            type_a, type_b, failure=Failure.TYPE, reason=f"type {type_a} ≠ {type_b}"
        )
    parity = _parity_failure(type_a, type_b)
    if parity is not None:
        return EquivalenceVerdict(type_a, type_b, failure=Failure.PARITY, reason=parity)
    A, B = type_a.configuration, type_b.configuration
    element = configurations_equivalent(A, B)
    if element is None:
        reason = f"configurations {A} and {B} lie in different {A.space.group}-orbits"
        return EquivalenceVerdict(type_a, type_b, failure=Failure.CONFIGURATION, reason=reason)
    return EquivalenceVerdict(type_a, type_b, witness=build_witness(nf_a, nf_b, element))


def curves_equivalent(nf_a: NormalForm, nf_b: NormalForm) -> Witness | None:
    """The witness of :func:`compare_curves`, or ``None`` when the curves differ.

    Raises:
        NonReducedError: If either curve is not reduced.
        WitnessVerificationError: If a witness fails its pullback check.
    """
    return compare_curves(nf_a, nf_b).witness
