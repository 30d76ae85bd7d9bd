"""Exact toolkit for Seidel switching on small graphs."""

from .classes import (
    CensusRecord,
    SwitchingClass,
    census,
    census_labeled_components,
    check_complement_class,
    switching_class,
)
from .generators import FAMILIES, gen
from .graph6 import Graph6Error, from_graph6, to_graph6
from .graphs import (
    Graph,
    VertexSet,
    complement,
    graph_from_code,
    graph_to_code,
    induced_subgraph,
    make_graph,
    relabel,
)
from .invariants import class_signature, seidel_char_poly, seidel_matrix
from .iso import (
    AutomorphismGroup,
    CanonicalForm,
    automorphism_count,
    automorphisms,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    find_isomorphism,
    is_isomorphic,
    nonisomorphic_graphs,
    similarity_orbits,
)
from .iss import (
    EdgeIssReport,
    IssFamily,
    all_vertices_iss,
    complemented_core_agreement,
    core_neighborhoods_partition,
    degree_extremes_adjacent,
    edge_iss_conditions,
    edge_iss_direct,
    edge_removed_agreement,
    is_iss,
    iss_family,
    vertex_iss_set,
)
from .switching import (
    CheckResult,
    check_complement_commutes,
    check_complement_switch,
    check_symmetric_difference,
    switch_sequence,
    switch_set,
    switch_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismGroup",
    "CanonicalForm",
    "CensusRecord",
    "CheckResult",
    "EdgeIssReport",
    "FAMILIES",
    "Graph",
    "Graph6Error",
    "IssFamily",
    "SwitchingClass",
    "VertexSet",
    "all_vertices_iss",
    "automorphism_count",
    "automorphisms",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "census",
    "census_labeled_components",
    "check_complement_class",
    "check_complement_commutes",
    "check_complement_switch",
    "check_symmetric_difference",
    "class_signature",
    "complement",
    "complemented_core_agreement",
    "core_neighborhoods_partition",
    "degree_extremes_adjacent",
    "edge_iss_conditions",
    "edge_iss_direct",
    "edge_removed_agreement",
    "find_isomorphism",
    "from_graph6",
    "gen",
    "graph_from_code",
    "graph_to_code",
    "induced_subgraph",
    "is_isomorphic",
    "is_iss",
    "iss_family",
    "make_graph",
    "nonisomorphic_graphs",
    "relabel",
    "seidel_char_poly",
    "seidel_matrix",
    "similarity_orbits",
    "switch_sequence",
    "switch_set",
    "switch_vertex",
    "switching_class",
    "to_graph6",
    "vertex_iss_set",
    "__version__",
]
