"""Euclid chains, the blowup simulator and resolution trees."""

from qhc.resolution.euclid import (
    ChainError,
    EuclidChain,
    EuclidStep,
    chain_arms,
    chain_self_intersections,
    continuant,
    euclid_chain,
    weights_from_chain,
)
from qhc.resolution.export import ExportFormat, export_graph, to_dot, to_json_payload, to_text
from qhc.resolution.simulator import simulate_resolution
from qhc.resolution.tree import (
    Attachment,
    BlowupRecord,
    BranchLabel,
    DivisorLine,
    Marker,
    ResolutionError,
    ResolutionTree,
    trees_isomorphic,
)

__all__ = [
    "Attachment",
    "BlowupRecord",
    "BranchLabel",
    "ChainError",
    "DivisorLine",
    "EuclidChain",
    "EuclidStep",
    "ExportFormat",
    "Marker",
    "ResolutionError",
    "ResolutionTree",
    "chain_arms",
    "chain_self_intersections",
    "continuant",
    "euclid_chain",
    "export_graph",
    "simulate_resolution",
    "to_dot",
    "to_json_payload",
    "to_text",
    "trees_isomorphic",
    "weights_from_chain",
]
