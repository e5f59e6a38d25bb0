"""Hyperplane arrangements from simple gain graphs.

Exact characteristic polynomials through three independent computations,
freeness deciders with replayable certificates, the signed-graph freeness
characterization, rank-2 multiarrangement exponents, and exhaustive
cross-checking verification suites.
"""

from .arrangement import (
    Arrangement,
    Hyperplane,
    build_affinographic,
    build_bias,
    build_cone,
    essentialize,
    restriction,
    ziegler_restriction,
)
from .charpoly import (
    chi_finite_field_oracle,
    chi_gaingraph_recursive,
    chi_of_kind,
    chi_poset,
    intersection_poset,
    region_count,
)
from .errors import (
    ArrangementError,
    BoundExceeded,
    DomainError,
    GainArrError,
    GraphError,
    ParseError,
    SearchBudgetExceeded,
    VerificationError,
)
from .families import (
    FAMILY_KINDS,
    EDELMAN_REINER_3,
    Digraph,
    ab_free_criterion,
    ab_supersolvable_criterion,
    digraph_to_gaingraph,
    make_family,
    raney,
)
from .freeness import (
    FreenessCertificate,
    df_along_edges,
    freeness_verdicts,
    if_along_edges,
    replay_certificate,
)
from .gaingraph import (
    GROUP_Z,
    GainGraph,
    contract_edge,
    delete_edge,
    enumerate_cycles,
    group_f,
    induced_subgraph,
    is_balanced,
    switch_vertex,
)
from .graphio import parse_graph, serialize_graph
from .intpoly import IntPolynomial, T
from .lowdim import (
    CoincidenceResult,
    Multiarrangement2D,
    coincidence_3dim,
    exp2_closed_form,
    exp2_solver,
    exponent_shift_matches,
    from_ziegler,
    make_multiarrangement2d,
    schur_bialternant_check,
    yoshinaga_free3,
)
from .signed import (
    SimpleGraph,
    edelman_reiner_freeness,
    has_induced_unbalanced_cycle,
    has_switching_obstruction,
    is_balanced_chordal,
    is_threshold,
    signed_freeness_criterion,
)
from .verify import SUITES, run_suite
from .version import __version__

__all__ = [
    "ArrangementError",
    "Arrangement",
    "BoundExceeded",
    "CoincidenceResult",
    "Digraph",
    "DomainError",
    "EDELMAN_REINER_3",
    "FAMILY_KINDS",
    "FreenessCertificate",
    "GROUP_Z",
    "GainArrError",
    "GainGraph",
    "GraphError",
    "Hyperplane",
    "IntPolynomial",
    "Multiarrangement2D",
    "ParseError",
    "SUITES",
    "SearchBudgetExceeded",
    "SimpleGraph",
    "T",
    "VerificationError",
    "ab_free_criterion",
    "ab_supersolvable_criterion",
    "build_affinographic",
    "build_bias",
    "build_cone",
    "chi_finite_field_oracle",
    "chi_gaingraph_recursive",
    "chi_of_kind",
    "chi_poset",
    "coincidence_3dim",
    "contract_edge",
    "delete_edge",
    "df_along_edges",
    "digraph_to_gaingraph",
    "edelman_reiner_freeness",
    "enumerate_cycles",
    "essentialize",
    "exp2_closed_form",
    "exp2_solver",
    "exponent_shift_matches",
    "freeness_verdicts",
    "from_ziegler",
    "group_f",
    "has_induced_unbalanced_cycle",
    "has_switching_obstruction",
    "if_along_edges",
    "induced_subgraph",
    "intersection_poset",
    "is_balanced",
    "is_balanced_chordal",
    "is_threshold",
    "make_family",
    "make_multiarrangement2d",
    "parse_graph",
    "raney",
    "region_count",
    "replay_certificate",
    "restriction",
    "run_suite",
    "schur_bialternant_check",
    "serialize_graph",
    "signed_freeness_criterion",
    "switch_vertex",
    "ziegler_restriction",
    "yoshinaga_free3",
    "__version__",
]
