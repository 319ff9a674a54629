"""Serialization of resolution trees as text, Graphviz DOT and JSON."""

from __future__ import annotations

import json
from enum import Enum
from typing import Any

import graphviz

from qhc.resolution.tree import Attachment, ResolutionTree


class ExportFormat(str, Enum):
    TEXT = "text"
    DOT = "dot"
    JSON = "json"


def _representative_text(attachment: Attachment) -> str | None:
    if attachment.representative is None:
        return None
    return str(attachment.representative)


def to_text(tree: ResolutionTree) -> str:
    """One line, e.g. ``D1(-3) — D2(-1) — D3(-2); branch@D2``."""
    return str(tree)


def to_dot(tree: ResolutionTree, comment: str | None = None) -> str:
    """Undirected DOT graph with divisor nodes ``D<i>`` and branch leaves ``B<j>``."""
    graph = graphviz.Graph("resolution", comment=comment)
    graph.attr("node", shape="circle")
    for line in tree.lines:
        graph.node(line.name, label=f"{line.name} ({line.self_intersection})")
    for a, b in zip(tree.lines, tree.lines[1:]):
        graph.edge(a.name, b.name)
    for j, attachment in enumerate(tree.attachments, start=1):
        label = attachment.label.value
        representative = _representative_text(attachment)
        if representative is not None:
            label = f"{label} [{representative}]"
        graph.node(f"B{j}", label=label, shape="plaintext")
        graph.edge(f"D{attachment.line}", f"B{j}")
    return graph.source


def to_json_payload(tree: ResolutionTree) -> dict[str, Any]:
    return {
        "lines": [
            {
                "index": line.index,
                "self_intersection": line.self_intersection,
                "markers": sorted(marker.value for marker in line.markers),
            }
            for line in tree.lines
        ],
        "attachments": [
            {
                "line": attachment.line,
                "label": attachment.label.value,
                "lambda": _representative_text(attachment),
            }
            for attachment in tree.attachments
        ],
        "blowups": tree.blowup_count,
    }


def export_graph(tree: ResolutionTree, format: ExportFormat | str = ExportFormat.TEXT) -> str:
    """Serialize ``tree`` deterministically.

    Raises:
        ValueError: If ``format`` is not one of text, dot and json.
    """
    try:
        chosen = ExportFormat(format)
    except ValueError:
        raise ValueError(f"unknown export format {format!r}") from None
    if chosen is ExportFormat.DOT:
        return to_dot(tree)
    if chosen is ExportFormat.JSON:
        return json.dumps(to_json_payload(tree), indent=2, ensure_ascii=False)
    return to_text(tree)
