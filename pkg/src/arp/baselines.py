"""Single-release baselines: random search and greedy heuristics H1..H8.

The greedy family ranks features by a value factor (optionally per unit of
effort), scans the ranking, adds whatever still fits, and stops when nothing
remaining fits. The two-factor variant interleaves two rankings, alternating
A[0], B[0], A[1], B[1], ... and skipping features already merged. All ranking
ties break by ascending feature id, matching the exact solver's tie policy so
results stay comparable.
"""

import random
from dataclasses import dataclass
from enum import Enum

from .errors import ArpError
from .model import FEASIBILITY_TOL, Feature, ParetoResult, Plan
from .planning import ArpInstance, dominates, make_plan


class Factor(Enum):
    SAT = "satisfaction"
    DISSAT = "dissatisfaction"
    SAT_PER_EFFORT = "satisfaction-per-effort"
    DISSAT_PER_EFFORT = "dissatisfaction-per-effort"
    SAT_PLUS_DISSAT = "satisfaction-plus-dissatisfaction"
    SUM_PER_EFFORT = "sum-per-effort"


_RATIO_FACTORS = {Factor.SAT_PER_EFFORT, Factor.DISSAT_PER_EFFORT, Factor.SUM_PER_EFFORT}


def factor_value(feature: Feature, factor: Factor) -> float:
    if factor in _RATIO_FACTORS and feature.effort == 0:
        raise ArpError(
            "ZERO_EFFORT_WITH_RATIO_FACTOR",
            f"feature {feature.id} has zero effort; per-effort ranking is undefined",
        )
    if factor is Factor.SAT:
        return feature.sat_value
    if factor is Factor.DISSAT:
        return feature.dissat_value
    if factor is Factor.SAT_PER_EFFORT:
        return feature.sat_value / feature.effort
    if factor is Factor.DISSAT_PER_EFFORT:
        return feature.dissat_value / feature.effort
    if factor is Factor.SAT_PLUS_DISSAT:
        return feature.sat_value + feature.dissat_value
    return (feature.sat_value + feature.dissat_value) / feature.effort


class PlanLabel(Enum):
    IDENTICAL = "identical"
    DOMINATED = "dominated"
    NEW_PARETO = "new_pareto"


@dataclass(frozen=True, slots=True)
class HeuristicSpec:
    """One of the eight benchmark configurations."""

    id: str
    algorithm: str  # "one_factor" | "two_factor"
    factors: tuple[Factor, ...]

    def __post_init__(self):
        arity = 1 if self.algorithm == "one_factor" else 2
        if len(self.factors) != arity:
            raise ArpError("INVALID_HEURISTIC", f"{self.id}: {self.algorithm} needs {arity} factor(s)")


HEURISTICS: dict[str, HeuristicSpec] = {
    "H1": HeuristicSpec("H1", "one_factor", (Factor.SAT,)),
    "H2": HeuristicSpec("H2", "one_factor", (Factor.DISSAT,)),
    "H3": HeuristicSpec("H3", "one_factor", (Factor.SAT_PER_EFFORT,)),
    "H4": HeuristicSpec("H4", "one_factor", (Factor.DISSAT_PER_EFFORT,)),
    "H5": HeuristicSpec("H5", "one_factor", (Factor.SAT_PLUS_DISSAT,)),
    "H6": HeuristicSpec("H6", "one_factor", (Factor.SUM_PER_EFFORT,)),
    "H7": HeuristicSpec("H7", "two_factor", (Factor.SAT, Factor.DISSAT)),
    "H8": HeuristicSpec("H8", "two_factor", (Factor.SAT_PER_EFFORT, Factor.DISSAT_PER_EFFORT)),
}


def _require_single_release(instance: ArpInstance) -> None:
    if instance.config.k_releases != 1:
        raise ArpError("SINGLE_RELEASE_ONLY", "baselines are defined for a single next release")


def _fill_greedy(instance: ArpInstance, ordered: list[int]) -> Plan:
    """Scan positions in order, adding each feature that still fits."""
    cap = instance.config.capacities[0]
    used = 0.0
    assignment = [2] * instance.n_features
    for pos in ordered:
        effort = instance.features[pos].effort
        if used + effort <= cap + FEASIBILITY_TOL:
            used += effort
            assignment[pos] = 1
    return make_plan(assignment, instance)


def random_plan(instance: ArpInstance, seed: int) -> Plan:
    """Uniformly pick fitting features until none fits; deterministic per seed."""
    _require_single_release(instance)
    rng = random.Random(seed)
    cap = instance.config.capacities[0]
    used = 0.0
    remaining = list(range(instance.n_features))
    assignment = [2] * instance.n_features
    while True:
        fitting = [pos for pos in remaining if used + instance.features[pos].effort <= cap + FEASIBILITY_TOL]
        if not fitting:
            break
        pos = fitting[rng.randrange(len(fitting))]
        assignment[pos] = 1
        used += instance.features[pos].effort
        remaining.remove(pos)
    return make_plan(assignment, instance)


def greedy_one_factor(instance: ArpInstance, factor: Factor) -> Plan:
    _require_single_release(instance)
    ranked = sorted(
        range(instance.n_features),
        key=lambda pos: (-factor_value(instance.features[pos], factor), instance.features[pos].id),
    )
    return _fill_greedy(instance, ranked)


def greedy_two_factor(instance: ArpInstance, factor_a: Factor, factor_b: Factor) -> Plan:
    _require_single_release(instance)
    rank = lambda factor: sorted(
        range(instance.n_features),
        key=lambda pos: (-factor_value(instance.features[pos], factor), instance.features[pos].id),
    )
    merged: list[int] = []
    taken: set[int] = set()
    for a, b in zip(rank(factor_a), rank(factor_b)):
        for pos in (a, b):
            if pos not in taken:
                taken.add(pos)
                merged.append(pos)
    return _fill_greedy(instance, merged)


def run_heuristic(instance: ArpInstance, spec: HeuristicSpec) -> Plan:
    if spec.algorithm == "one_factor":
        return greedy_one_factor(instance, spec.factors[0])
    return greedy_two_factor(instance, spec.factors[0], spec.factors[1])


@dataclass(frozen=True, slots=True)
class Classification:
    """Heuristic plans labelled against a reference trade-off set.

    ``labels`` and ``plans`` are parallel to the evaluated input; the three
    counts partition it.
    """

    dominated: int
    identical: int
    new_pareto: int
    labels: tuple[PlanLabel, ...]
    plans: tuple[Plan, ...]


def classify_vs_reference(heuristic_plans: list[Plan], reference) -> Classification:
    """Label each plan IDENTICAL (assignment matches a reference plan),
    DOMINATED (some reference plan dominates its values), or NEW_PARETO.
    """
    ref_plans = list(reference.plans) if isinstance(reference, ParetoResult) else list(reference)
    ref_assignments = {p.assignment for p in ref_plans}
    ref_values = [p.values() for p in ref_plans]
    labels = []
    for plan in heuristic_plans:
        if ref_plans and len(plan.assignment) != len(ref_plans[0].assignment):
            raise ArpError("INSTANCE_MISMATCH", "heuristic and reference plans cover different feature sets")
        if plan.assignment in ref_assignments:
            labels.append(PlanLabel.IDENTICAL)
        elif any(dominates(rv, plan.values()) for rv in ref_values):
            labels.append(PlanLabel.DOMINATED)
        else:
            labels.append(PlanLabel.NEW_PARETO)
    return Classification(
        dominated=sum(1 for l in labels if l is PlanLabel.DOMINATED),
        identical=sum(1 for l in labels if l is PlanLabel.IDENTICAL),
        new_pareto=sum(1 for l in labels if l is PlanLabel.NEW_PARETO),
        labels=tuple(labels),
        plans=tuple(heuristic_plans),
    )


@dataclass(frozen=True, slots=True)
class RandomBaselineReport:
    """Value pairs of the replications plus dominance stats vs a reference set.

    ``best_gap`` is the smallest relative improvement a reference plan still
    holds over any random plan, as (satisfaction %, dissatisfaction %); it is
    (0, 0) when some random plan matches or escapes the reference.
    """

    values: tuple[tuple[float, float], ...]
    dominated: int
    identical: int
    undominated: int
    best_gap: tuple[float, float]

    @property
    def dominated_fraction(self) -> float:
        return self.dominated / len(self.values) if self.values else 0.0


def random_baseline(
    instance: ArpInstance, replications: int, seed: int, reference
) -> RandomBaselineReport:
    """Run seeded random plans (seeds seed+0 .. seed+reps-1) and compare.

    Per-replication seeds are derived as seed + index so replications can be
    generated in any order, including in parallel, without changing results.
    """
    if replications < 1:
        raise ArpError("INVALID_REPLICATIONS", "need at least one replication")
    ref_plans = list(reference.plans) if isinstance(reference, ParetoResult) else list(reference)
    ref_values = [p.values() for p in ref_plans]

    values = []
    dominated = identical = undominated = 0
    best_gap = None
    for rep in range(replications):
        plan = random_plan(instance, seed + rep)
        v = plan.values()
        values.append(v)
        if v in ref_values:
            identical += 1
            best_gap = (0.0, 0.0)
            continue
        dominators = [rv for rv in ref_values if dominates(rv, v)]
        if not dominators:
            undominated += 1
            best_gap = (0.0, 0.0)
            continue
        dominated += 1
        ts, tds = v
        gaps = [
            (
                100.0 * (rts - ts) / ts if ts > 0 else 0.0,
                100.0 * (tds - rtds) / tds if tds > 0 else 0.0,
            )
            for rts, rtds in dominators
        ]
        closest = min(gaps, key=lambda g: g[0] + g[1])
        if best_gap is None or sum(closest) < sum(best_gap):
            best_gap = closest
    return RandomBaselineReport(
        values=tuple(values),
        dominated=dominated,
        identical=identical,
        undominated=undominated,
        best_gap=best_gap or (0.0, 0.0),
    )
