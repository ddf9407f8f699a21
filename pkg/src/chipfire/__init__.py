"""Exact chip-firing computations on finite connected multigraphs:
burning passes, q-reduced divisors, divisor rank, and exhaustive solvers
for gonality and multiplicity-free gonality."""

from .divisors import Divisor, canonical_divisor, equivalent
from .graphs import (
    DisconnectedGraphError,
    GraphError,
    Multigraph,
    cartesian_product,
    cone,
)
from .rank import RankResult, has_positive_rank, rank, rank_at_least, riemann_roch_check
from .reduction import (
    BurnReport,
    ReductionResult,
    dhar,
    is_q_reduced,
    q_reduce,
    rank_zero_by_burning,
    rank_zero_certificate,
    reduced_form,
)
from .search import (
    GonalitySearchResult,
    SearchStats,
    gonality,
    max_mf_rank,
    mf_gonality,
    positive_rank_representatives,
)

__version__ = "0.1.0"

__all__ = [
    "BurnReport",
    "DisconnectedGraphError",
    "Divisor",
    "GonalitySearchResult",
    "GraphError",
    "Multigraph",
    "RankResult",
    "ReductionResult",
    "SearchStats",
    "canonical_divisor",
    "cartesian_product",
    "cone",
    "dhar",
    "equivalent",
    "gonality",
    "has_positive_rank",
    "is_q_reduced",
    "max_mf_rank",
    "mf_gonality",
    "positive_rank_representatives",
    "q_reduce",
    "rank",
    "rank_at_least",
    "rank_zero_by_burning",
    "rank_zero_certificate",
    "reduced_form",
    "riemann_roch_check",
]
