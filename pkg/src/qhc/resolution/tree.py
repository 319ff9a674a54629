"""The exceptional divisor of a resolution as a weighted linear chain."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from qhc.poly.scalar import PointP1


class Marker(str, Enum):
    """Structural role of a divisor line."""

    PRINCIPAL = "principal"
    END = "end"


class BranchLabel(str, Enum):
    X_AXIS = "x-axis"
    Y_AXIS = "y-axis"
    BRANCH = "branch"


@dataclass(frozen=True)
class DivisorLine:
    """A line of the chain; ``index`` is its 1-based position, ``created`` its blowup."""

    index: int
    self_intersection: int
    markers: frozenset[Marker] = frozenset()
    created: int = 0

    @property
    def name(self) -> str:
        return f"D{self.index}"

    def __str__(self) -> str:
        return f"{self.name}({self.self_intersection})"


@dataclass(frozen=True, eq=False)
class Attachment:
    """A curve branch meeting line ``line`` at the point ``representative`` of that line."""

    line: int
    label: BranchLabel
    representative: PointP1 | None = None


@dataclass(frozen=True)
class BlowupRecord:
    """Bookkeeping after one blowup."""

    center_lines: tuple[int, ...]
    line_count: int
    total_self_intersection: int


class ResolutionError(RuntimeError):
    """Raised when a resolution breaks the shape or bookkeeping of a minimal resolution."""


def line_markers(chain: Sequence[int], position: int) -> frozenset[Marker]:
    markers: set[Marker] = set()
    if chain[position] == -1:
        markers.add(Marker.PRINCIPAL)
    if position in (0, len(chain) - 1):
        markers.add(Marker.END)
    return frozenset(markers)


@dataclass(frozen=True, eq=False)
class ResolutionTree:
    """Lines in chain order, the branches attached to them and the blowup history."""

    lines: tuple[DivisorLine, ...]
    attachments: tuple[Attachment, ...] = ()
    blowup_count: int = 0
    history: tuple[BlowupRecord, ...] = ()

    @classmethod
    def from_chain(
        cls, chain: Sequence[int], attachments: Sequence[Attachment] = ()
    ) -> ResolutionTree:
        """A tree with the given self-intersections, numbered along the chain."""
        lines = tuple(
            DivisorLine(i + 1, c, line_markers(chain, i), i + 1) for i, c in enumerate(chain)
        )
        return cls(lines, tuple(attachments), len(lines))

    @property
    def chain(self) -> list[int]:
        return [line.self_intersection for line in self.lines]

    def line(self, index: int) -> DivisorLine:
        return self.lines[index - 1]

    def principal(self) -> DivisorLine | None:
        for line in self.lines:
            if Marker.PRINCIPAL in line.markers:
                return line
        return None

    def graph(self) -> nx.Graph:
        """The dual weighted graph: one node per line, an edge per intersection."""
        graph = nx.Graph()
        for line in self.lines:
            graph.add_node(
                line.index,
                self_intersection=line.self_intersection,
                markers=frozenset(line.markers),
            )
        graph.add_edges_from((a.index, b.index) for a, b in zip(self.lines, self.lines[1:]))
        return graph

    def check_invariants(self) -> None:
        """Check the shape every minimal resolution of a quasi-homogeneous curve has.

        Raises:
            ResolutionError: If the chain is not linear, has no unique ``-1`` line,
                carries a branch on an interior non-principal line, or its history
                breaks the blowup bookkeeping.
        """
        graph = self.graph()
        if self.lines and not nx.is_connected(graph):
            raise ResolutionError("divisor is not connected")
        if any(degree > 2 for _, degree in graph.degree()):
            raise ResolutionError("divisor is not a linear chain")
        if self.chain.count(-1) != 1:
            raise ResolutionError(f"chain {self.chain} needs exactly one -1 line")
        for attachment in self.attachments:
            markers = self.line(attachment.line).markers
            if not markers:
                raise ResolutionError(
                    f"{attachment.label.value} meets interior line D{attachment.line}"
                )
        count, total = 0, 0
        for record in self.history:
            if record.line_count != count + 1:
                raise ResolutionError("a blowup must add exactly one line")
            if record.total_self_intersection != total - 1 - len(record.center_lines):
                raise ResolutionError("self-intersections not conserved across a blowup")
            count, total = record.line_count, record.total_self_intersection
        if self.history and (count, total) != (len(self.lines), sum(self.chain)):
            raise ResolutionError("history does not end at the final divisor")

    def __str__(self) -> str:
        body = " — ".join(str(line) for line in self.lines)
        attached = ", ".join(f"{a.label.value}@D{a.line}" for a in self.attachments)
        return f"{body}; {attached}" if attached else body


def trees_isomorphic(t1: ResolutionTree, t2: ResolutionTree) -> bool:
    """Equal weighted chains up to reversal, with corresponding markers.

    Where the branches attach is moduli data and is ignored.
    """
    return nx.is_isomorphic(
        t1.graph(),
        t2.graph(),
        node_match=lambda a, b: (a["self_intersection"], a["markers"])
        == (b["self_intersection"], b["markers"]),
    )
