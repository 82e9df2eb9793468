"""Exact and Monte Carlo batch-failure signatures of two-state networks."""

from .combinatorics import (
    StratumTable,
    binomial,
    build_stratum_table,
    enumerate_orders,
    n_star,
    random_order,
    random_partition_with_k_blocks,
    stirling2,
)
from .engine import (
    MResult,
    SampledTSignature,
    TSignature,
    calculate_m,
    classic_signature,
    exact_tsignature,
    parallel_exact_tsignature,
)
from .errors import (
    ContractError,
    EnumerationCapError,
    GraphParseError,
    NetworkValidationError,
    UnsupportedModeError,
)
from .fixtures import fixture_path, load_fixture
from .graph import (
    Network,
    find_path,
    greedy_failed_count,
    is_terminal_connected,
    min_failed_subset_size,
    parse_network,
)
from .reliability import (
    CountingModel,
    ReliabilityCurve,
    binomial_model,
    count_cdf,
    poisson_model,
    survival_mixture,
)
from .sampling import (
    ConvergenceReport,
    SamplingPlan,
    approx_tsignature,
    convergence_report,
)

__version__ = "0.1.0"

__all__ = [
    "StratumTable",
    "binomial",
    "build_stratum_table",
    "enumerate_orders",
    "n_star",
    "random_order",
    "random_partition_with_k_blocks",
    "stirling2",
    "MResult",
    "SampledTSignature",
    "TSignature",
    "calculate_m",
    "classic_signature",
    "exact_tsignature",
    "parallel_exact_tsignature",
    "ContractError",
    "EnumerationCapError",
    "GraphParseError",
    "NetworkValidationError",
    "UnsupportedModeError",
    "fixture_path",
    "load_fixture",
    "Network",
    "find_path",
    "greedy_failed_count",
    "is_terminal_connected",
    "min_failed_subset_size",
    "parse_network",
    "CountingModel",
    "ReliabilityCurve",
    "binomial_model",
    "count_cdf",
    "poisson_model",
    "survival_mixture",
    "ConvergenceReport",
    "SamplingPlan",
    "approx_tsignature",
    "convergence_report",
    "__version__",
]
