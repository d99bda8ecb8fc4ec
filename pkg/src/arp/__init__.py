"""Asymmetric release planning toolkit.

Feature values are elicited per stakeholder (one-point, pairwise comparison,
or continuous Kano), aggregated into independent satisfaction and
dissatisfaction scores, and traded off exactly over a scalarization grid into
a set of non-dominated release plans.
"""

from .analysis import RankingTable, compare_manual, core_features, fleiss_kappa, symmetric_difference
from .baselines import (
    HEURISTICS,
    Classification,
    Factor,
    HeuristicSpec,
    PlanLabel,
    classify_vs_reference,
    greedy_one_factor,
    greedy_two_factor,
    random_baseline,
    random_plan,
    run_heuristic,
)
from .errors import ArpError
from .model import Feature, ParetoResult, Plan, ReleaseConfig, Stakeholder, validate_config
from .planning import (
    ArpInstance,
    dominates,
    is_feasible,
    make_plan,
    pareto_filter,
    scalarized_objective,
    total_dissatisfaction,
    total_satisfaction,
)
from .solver import SolveReport, brute_force_pareto, brute_force_scalarized, solve_scalarized
from .sweep import SweepConfig, alpha_grid, exact_breakpoints, sdo_sweep
from .valuation import (
    AhpMatrix,
    FeatureKanoProfile,
    KanoAttribute,
    KanoChoice,
    KanoResponse,
    KanoScore,
    OnePointResponse,
    Perspective,
    aggregate_kano,
    ahp_priorities,
    ahp_values,
    classify_traditional,
    kano_scores,
    kano_values,
    normalize_kano,
    one_point_values,
    pert_effort,
    product_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "AhpMatrix", "ArpError", "ArpInstance", "Classification", "Factor", "Feature",
    "FeatureKanoProfile", "HEURISTICS", "HeuristicSpec", "KanoAttribute", "KanoChoice",
    "KanoResponse", "KanoScore", "OnePointResponse", "ParetoResult", "Perspective",
    "Plan", "PlanLabel", "RankingTable", "ReleaseConfig", "SolveReport", "Stakeholder",
    "SweepConfig", "aggregate_kano", "ahp_priorities", "ahp_values", "alpha_grid",
    "brute_force_pareto", "brute_force_scalarized", "classify_traditional",
    "classify_vs_reference", "compare_manual", "core_features", "dominates",
    "exact_breakpoints", "fleiss_kappa", "greedy_one_factor", "greedy_two_factor",
    "is_feasible", "kano_scores", "kano_values", "make_plan", "normalize_kano",
    "one_point_values", "pareto_filter", "pert_effort", "product_coefficients",
    "random_baseline", "random_plan", "run_heuristic", "scalarized_objective",
    "sdo_sweep", "solve_scalarized", "symmetric_difference", "total_dissatisfaction",
    "total_satisfaction", "validate_config",
]
