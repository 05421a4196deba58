"""Exact stable reduction of degenerating curves, worked on dual graphs."""

from .basechange import (
    CoverPiece,
    DescentData,
    apply_base_change,
    piece_degree_unit,
    piece_genus,
    search_descent,
    trivial_descent,
    validate_descent,
)
from .canonical import canonical_form, from_canonical
from .enumeration import enumerate_stable_graphs, stable_graphs
from .fiberfile import dumps_descent, dumps_fiber, parse_descent, parse_fiber
from .local import node_base_change, normalization_witness, split_smooth_point
from .model import (
    Component,
    ComponentInvariants,
    FiberConfiguration,
    Kind,
    Node,
    arithmetic_genus,
    component_invariants,
    stability_report,
    validate_configuration,
)
from .numerology import genus_formulas, hilbert_polynomial
from .pipeline import PipelineResult, reduce_fiber
from .stabilize import classify_components, contract_one, stabilize
from .trace import MoveTrace, replay

__all__ = [
    "Component",
    "ComponentInvariants",
    "CoverPiece",
    "DescentData",
    "FiberConfiguration",
    "Kind",
    "MoveTrace",
    "Node",
    "PipelineResult",
    "apply_base_change",
    "arithmetic_genus",
    "canonical_form",
    "classify_components",
    "component_invariants",
    "contract_one",
    "dumps_descent",
    "dumps_fiber",
    "enumerate_stable_graphs",
    "from_canonical",
    "genus_formulas",
    "hilbert_polynomial",
    "node_base_change",
    "normalization_witness",
    "parse_descent",
    "parse_fiber",
    "piece_degree_unit",
    "piece_genus",
    "reduce_fiber",
    "replay",
    "search_descent",
    "split_smooth_point",
    "stability_report",
    "stabilize",
    "stable_graphs",
    "trivial_descent",
    "validate_configuration",
    "validate_descent",
]
