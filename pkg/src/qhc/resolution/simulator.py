"""Symbolic point blowups down to the minimal resolution of a quasi-homogeneous curve.

The curve is resolved together with its pencil ``y^p = c * x^q``: one member of
the pencil that is not a branch of the curve travels along as an unrecorded
probe branch. Every infinitely near point carries local coordinates in which it
is the origin, the local equations of the branches through it and the divisor
lines through it, which are always coordinate axes.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

import networkx as nx

from qhc.poly.bipoly import BiPoly, substitute
from qhc.poly.scalar import INFINITY, Field, PointP1, Scalar, format_scalar
from qhc.quasihom.classify import NonReducedError, check_reduced
from qhc.quasihom.normal_form import NormalForm
from qhc.resolution.tree import (
    Attachment,
    BlowupRecord,
    BranchLabel,
    DivisorLine,
    ResolutionError,
    ResolutionTree,
    line_markers,
)

logger = logging.getLogger(__name__)

MAX_BLOWUPS = 10_000


@dataclass(frozen=True, eq=False)
class _Branch:
    label: BranchLabel | None  # None marks the probe
    poly: BiPoly


@dataclass(frozen=True, eq=False)
class _Point:
    branches: tuple[_Branch, ...]
    lines: dict[str, int]  # "x" or "y" -> id of the divisor line with that local equation
    representative: PointP1 | None


def _order(G: BiPoly) -> int:
    return min(i + j for i, j in G.terms)


def _chart_a(G: BiPoly, e: int) -> BiPoly:
    """Strict transform under ``(x, y) <- (x, x*y)``."""
    return BiPoly({(i + j - e, j): c for (i, j), c in G.terms.items()}, G.field)


def _chart_b(G: BiPoly, e: int) -> BiPoly:
    """Strict transform under ``(x, y) <- (x*y, y)``."""
    return BiPoly({(i, i + j - e): c for (i, j), c in G.terms.items()}, G.field)


def _meeting_point(G: BiPoly) -> Scalar | None:
    """Where the strict transform ``G`` meets the new line ``x = 0``, or ``None`` if it does not.

    Raises:
        ResolutionError: If it meets the line in more than one point.
    """
    restricted = BiPoly({(0, j): c for (i, j), c in G.terms.items() if i == 0}, G.field)
    if restricted.is_zero:
        raise ResolutionError(f"strict transform {G} contains the exceptional line")
    k = max(j for _, j in restricted.terms)
    if k == 0:
        return None
    top = restricted.coefficient(0, k)
    r = -restricted.coefficient(0, k - 1) / (top * k)
    if (BiPoly.y(G.field) - r) ** k * top != restricted:
        raise ResolutionError(f"strict transform {G} meets the exceptional line twice")
    return r


def _linear_part(G: BiPoly) -> tuple[Scalar, Scalar]:
    return G.coefficient(1, 0), G.coefficient(0, 1)


def _is_resolved(point: _Point) -> bool:
    """Normal crossings: at most two components, smooth branches, all transverse."""
    if len(point.branches) + len(point.lines) > 2:
        return False
    linear_parts = []
    for branch in point.branches:
        if _order(branch.poly) != 1:
            return False
        a, b = _linear_part(branch.poly)
        if "x" in point.lines and b.is_zero():
            return False
        if "y" in point.lines and a.is_zero():
            return False
        linear_parts.append((a, b))
    if len(linear_parts) == 2:
        (a1, b1), (a2, b2) = linear_parts
        return not (a1 * b2 - a2 * b1).is_zero()
    return True


def _probe_value(nf: NormalForm) -> Scalar:
    k = 1
    while any(lam == nf.field(k) for lam in nf.lambdas):
        k += 1
    return nf.field(k)


class _Simulation:
    def __init__(self, field: Field, max_blowups: int) -> None:
        self.field = field
        self.max_blowups = max_blowups
        self.self_intersection: dict[int, int] = {}
        self.edges: set[frozenset[int]] = set()
        self.attachments: list[tuple[int, BranchLabel, PointP1 | None]] = []
        self.history: list[BlowupRecord] = []

    def run(self, origin: _Point) -> None:
        pending = deque(self.blow_up(origin))
        while pending:
            point = pending.popleft()
            if _is_resolved(point):
                self.attach(point)
            else:
                pending.extend(self.blow_up(point))

    def attach(self, point: _Point) -> None:
        newest = max(point.lines.values())
        for branch in point.branches:
            if branch.label is not None:
                self.attachments.append((newest, branch.label, point.representative))

    def blow_up(self, point: _Point) -> list[_Point]:
        if len(self.self_intersection) >= self.max_blowups:
            raise ResolutionError(f"no minimal resolution within {self.max_blowups} blowups")
        new = len(self.self_intersection) + 1
        center = tuple(sorted(point.lines.values()))
        for line in center:
            self.self_intersection[line] -= 1
        self.self_intersection[new] = -1
        if len(center) == 2:
            self.edges.discard(frozenset(center))
        self.edges.update(frozenset((line, new)) for line in center)
        self.history.append(
            BlowupRecord(center, len(self.self_intersection), sum(self.self_intersection.values()))
        )
        logger.debug("blowup %d on lines %s with %d branches", new, center, len(point.branches))

        finite: list[tuple[Scalar, list[_Branch]]] = []
        at_infinity: list[_Branch] = []
        for branch in point.branches:
            e = _order(branch.poly)
            transformed = _chart_a(branch.poly, e)
            r = _meeting_point(transformed)
            if r is None:
                at_infinity.append(_Branch(branch.label, _chart_b(branch.poly, e)))
                continue
            if not r.is_zero():
                x, y = BiPoly.x(self.field), BiPoly.y(self.field)
                transformed = substitute(transformed, x, y + r)
            for value, members in finite:
                if value == r:
                    members.append(_Branch(branch.label, transformed))
                    break
            else:
                finite.append((r, [_Branch(branch.label, transformed)]))

        points: list[_Point] = []
        for r, members in finite:
            lines = {"x": new}
            if r.is_zero() and "y" in point.lines:
                lines["y"] = point.lines["y"]
            logger.debug(
                "point %s of D%d carries %d branches", format_scalar(r), new, len(members)
            )
            points.append(_Point(tuple(members), lines, PointP1(r)))
        if at_infinity:
            lines = {"y": new}
            if "x" in point.lines:
                lines["x"] = point.lines["x"]
            points.append(_Point(tuple(at_infinity), lines, INFINITY))
        return points

    def chain_order(self) -> list[int]:
        """Line ids along the chain, starting at the end with the smaller id."""
        graph = nx.Graph()
        graph.add_nodes_from(self.self_intersection)
        graph.add_edges_from(tuple(edge) for edge in self.edges)
        if not nx.is_connected(graph) or any(d > 2 for _, d in graph.degree()):
            raise ResolutionError("exceptional divisor is not a linear chain")
        if len(graph) == 1:
            return list(graph.nodes)
        start = min(node for node, degree in graph.degree() if degree == 1)
        return list(nx.dfs_preorder_nodes(graph, start))


def simulate_resolution(nf: NormalForm, *, max_blowups: int = MAX_BLOWUPS) -> ResolutionTree:
    """Blow up until the curve and its pencil have normal crossings with the divisor.

    The origin is always blown up. Each branch is attached to the line it finally
    meets, at its coordinate on that line: ``lambda`` for ``y^p - lambda*x^q``.

    Raises:
        NonReducedError: If the curve is not reduced.
        ResolutionError: If the blowups do not end in a minimal resolution.
    """
    if not check_reduced(nf):
        raise NonReducedError(f"{nf.factored()} is not reduced")
    field = nf.field
    x_label, y_label = BranchLabel.X_AXIS, BranchLabel.Y_AXIS
    if nf.swapped:
        x_label, y_label = y_label, x_label
    branches: list[_Branch] = []
    if nf.m:
        branches.append(_Branch(x_label, BiPoly.x(field)))
    if nf.n:
        branches.append(_Branch(y_label, BiPoly.y(field)))
    branches.extend(_Branch(BranchLabel.BRANCH, nf.branch(lam)) for lam in nf.lambdas)
    branches.append(_Branch(None, nf.branch(_probe_value(nf))))

    simulation = _Simulation(field, max_blowups)
    simulation.run(_Point(tuple(branches), {}, None))

    order = simulation.chain_order()
    position = {line: index + 1 for index, line in enumerate(order)}
    chain = [simulation.self_intersection[line] for line in order]
    lines = tuple(
        DivisorLine(index + 1, c, line_markers(chain, index), order[index])
        for index, c in enumerate(chain)
    )
    attachments = tuple(
        Attachment(position[line], label, representative)
        for line, label, representative in simulation.attachments
    )
    tree = ResolutionTree(lines, attachments, len(order), tuple(simulation.history))
    tree.check_invariants()
    return tree
