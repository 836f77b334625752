"""VPP investment planning with bounded-error time series aggregation."""

from vppopt.model import (
    AggregatedInstance,
    AggregatedSolution,
    FullSolution,
    GeneratorSpec,
    InvestmentPlan,
    Partition,
    ProblemInstance,
    Violation,
    build_aggregated_instance,
    check_feasibility,
    evaluate_aggregated_objective,
    evaluate_full_objective,
    map_full_to_aggregated,
)

__version__ = "0.1.0"

__all__ = [
    "AggregatedInstance",
    "AggregatedSolution",
    "FullSolution",
    "GeneratorSpec",
    "InvestmentPlan",
    "Partition",
    "ProblemInstance",
    "Violation",
    "build_aggregated_instance",
    "check_feasibility",
    "evaluate_aggregated_objective",
    "evaluate_full_objective",
    "map_full_to_aggregated",
    "__version__",
]
