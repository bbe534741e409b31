"""Dominating sets of the bipartite graph on two levels of the n-cube."""

from .constructions import (
    DominationCertificate,
    Provenance,
    Theorem1Parts,
    VerificationResult,
    certificate_from_json,
    certificate_to_json,
    theorem1_construct,
    theorem2_construct,
    theorem2_lower_bound_witness,
    verify_certificate,
    verify_theorem1_structural,
)
from .errors import (
    BudgetExceededError,
    CheckFailedError,
    InvalidParametersError,
    TooLargeError,
)
from .levelgraph import (
    Level,
    LevelGraphSpec,
    VertexRef,
    adjacent,
    graph_stats,
    materialize,
    neighbors_down,
    neighbors_up,
)
from .solver import (
    Method,
    SolveReport,
    branch_and_bound_gamma,
    brute_force_gamma,
    counting_lower_bound,
    greedy_dominate,
)
from .subsets import (
    PairFamily,
    Subset,
    binomial,
    enumerate_k_subsets,
    rank,
    spanning_pairs,
    unrank,
)

__version__ = "0.1.0"
