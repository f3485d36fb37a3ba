"""Eccentric graphs, their characterizations, and exhaustive verification."""

from .eccentric import eccentric_graph
from .graph import (
    FamilySpec,
    Graph,
    Graph6Error,
    GraphError,
    MixedExtensionSpec,
    complement,
    edge_set_equal,
    emit_graph6,
    generate,
    make_graph,
    mixed_extension_p4,
    parse_graph6,
)
from .iso import IsoResult, canonical_form, find_isomorphism
from .metrics import (
    UNREACHABLE,
    DisconnectedGraphError,
    all_pairs_distances,
    eccentricity_profile,
    is_self_centered,
)

__all__ = [
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "IsoResult",
    "MixedExtensionSpec",
    "UNREACHABLE",
    "DisconnectedGraphError",
    "all_pairs_distances",
    "canonical_form",
    "complement",
    "eccentric_graph",
    "eccentricity_profile",
    "edge_set_equal",
    "emit_graph6",
    "find_isomorphism",
    "generate",
    "is_self_centered",
    "make_graph",
    "mixed_extension_p4",
    "parse_graph6",
]
