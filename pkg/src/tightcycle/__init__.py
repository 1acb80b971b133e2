"""Codegree structure of 3-uniform hypergraphs and tight-cycle certificates.

The library answers, exactly and with machine-checkable evidence, the finite
form of a codegree Turan question: any n-vertex 3-uniform hypergraph whose
every pair of vertices lies in more than n/3 edges contains a homomorphic
copy of the length-11 tight cycle, and the mod-3 coloring construction shows
the threshold is sharp.  It provides the hypergraph representation, the
K4-minus apex/base structure analysis, closed-tight-walk detection, walk and
refutation certificates, the lower-bound generator, and exhaustive
codegree Turan numbers at small n.
"""

__version__ = "0.1.0"

from .constructions import (
    Coloring,
    balanced_coloring,
    complete_hypergraph,
    k4_minus_fixture,
    tight_cycle_hypergraph,
    z3_construction,
)
from .extremal import (
    ProfileRow,
    SearchBudgetExceeded,
    SearchConfig,
    SearchResult,
    SearchStats,
    density_profile,
    ex2_decision,
    ex2_exact,
)
from .hypergraph import Hypergraph3, new_hypergraph, parse_h3, serialize_h3
from .structure import (
    ApexDigraph,
    BaseGraph,
    DegreeViolation,
    K4MinusCopy,
    apex_digraph,
    base_graph,
    check_degree_implications,
    check_edge_claim,
    check_no_2cycles,
    count_k4minus,
    enumerate_k4minus,
    k4minus_at_edge,
    least_apex_copy,
    least_base_copy,
)
from .walks import (
    canonical_walk,
    count_closed_tight_walks,
    exists_closed_tight_walk,
    extend_by_three,
    find_closed_tight_walk,
    find_injective_tight_cycle,
    first_bad_window,
    is_closed_tight_walk,
    repeat_walk,
    walk_from_apex_base,
    walk_from_arc_chain,
)
from .witness import (
    Certificate,
    Gadgets,
    Premise,
    RefutationCertificate,
    WalkCertificate,
    certificate_from_json,
    certificate_to_json,
    find_conflict_vertex,
    find_hom_c11,
    verify_certificate,
)

__all__ = [
    "ApexDigraph",
    "BaseGraph",
    "Certificate",
    "Coloring",
    "DegreeViolation",
    "Gadgets",
    "Hypergraph3",
    "K4MinusCopy",
    "Premise",
    "ProfileRow",
    "RefutationCertificate",
    "SearchBudgetExceeded",
    "SearchConfig",
    "SearchResult",
    "SearchStats",
    "WalkCertificate",
    "apex_digraph",
    "balanced_coloring",
    "base_graph",
    "canonical_walk",
    "certificate_from_json",
    "certificate_to_json",
    "check_degree_implications",
    "check_edge_claim",
    "check_no_2cycles",
    "complete_hypergraph",
    "count_closed_tight_walks",
    "count_k4minus",
    "density_profile",
    "enumerate_k4minus",
    "ex2_decision",
    "ex2_exact",
    "exists_closed_tight_walk",
    "extend_by_three",
    "find_closed_tight_walk",
    "find_conflict_vertex",
    "find_hom_c11",
    "find_injective_tight_cycle",
    "first_bad_window",
    "is_closed_tight_walk",
    "k4_minus_fixture",
    "k4minus_at_edge",
    "least_apex_copy",
    "least_base_copy",
    "new_hypergraph",
    "parse_h3",
    "repeat_walk",
    "serialize_h3",
    "tight_cycle_hypergraph",
    "verify_certificate",
    "walk_from_apex_base",
    "walk_from_arc_chain",
    "z3_construction",
]
