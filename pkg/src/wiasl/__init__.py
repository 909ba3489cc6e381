"""Weak integer additive set-labeling toolkit.

Constructive labelers for nine named graph families, validity verifiers
for the integer-additive labeling classes, and an exact bounded-universe
solver that independently computes minimum ground-set cardinalities and
audits the published closed-form values.
"""

from .constructors import (
    CLAIMED_FORMULAS,
    Construction,
    NotBipartiteError,
    claimed_value,
    construct,
    construct_k_uniform,
    construction_exception,
)
from .graphs import (
    FAMILIES,
    FAMILY_MIN_N,
    BipartitionResult,
    FamilySpec,
    Graph,
    InvalidParameterError,
    SizeLimitError,
    bipartition,
    generate,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    independence_number,
    vertex_cover_number,
)
from .intset import (
    DEFAULT_UNIVERSE_BOUND,
    IntSet,
    UniverseOverflowError,
    subsets_of,
    sumset,
)
from .labeling import (
    InvalidLabelingError,
    NotAnEdgeError,
    SetLabeling,
    VerifyReport,
    Violation,
    edge_label,
    labeling_from_json,
    labeling_to_json,
    minimal_ground_set,
    singleton_cover,
    verify,
)
from .solver import (
    STATUS_INFEASIBLE,
    STATUS_OPTIMAL,
    STATUS_TIMEOUT,
    AuditRow,
    InfeasibleWithinUniverseError,
    SolveOptions,
    SolveResult,
    SolveTimeout,
    audit,
    audit_range,
    exists_labeling,
    min_ground_set,
    min_singleton_count,
)

__version__ = "0.1.0"

__all__ = [
    "AuditRow",
    "BipartitionResult",
    "CLAIMED_FORMULAS",
    "Construction",
    "DEFAULT_UNIVERSE_BOUND",
    "FAMILIES",
    "FAMILY_MIN_N",
    "FamilySpec",
    "Graph",
    "InfeasibleWithinUniverseError",
    "IntSet",
    "InvalidLabelingError",
    "InvalidParameterError",
    "NotAnEdgeError",
    "NotBipartiteError",
    "STATUS_INFEASIBLE",
    "STATUS_OPTIMAL",
    "STATUS_TIMEOUT",
    "SetLabeling",
    "SizeLimitError",
    "SolveOptions",
    "SolveResult",
    "SolveTimeout",
    "UniverseOverflowError",
    "VerifyReport",
    "Violation",
    "audit",
    "audit_range",
    "bipartition",
    "claimed_value",
    "construct",
    "construct_k_uniform",
    "construction_exception",
    "edge_label",
    "exists_labeling",
    "generate",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "independence_number",
    "labeling_from_json",
    "labeling_to_json",
    "min_ground_set",
    "min_singleton_count",
    "minimal_ground_set",
    "singleton_cover",
    "subsets_of",
    "sumset",
    "verify",
    "vertex_cover_number",
]
