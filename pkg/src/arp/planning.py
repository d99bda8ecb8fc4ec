"""Objectives, feasibility, dominance, and scalarization over release plans.

For a plan x: TS(x) sums w(k) * S(n) over offered features, TDS(x) sums
z(k) * DS(n) over every feature including the postponed bucket. A plan is
feasible when each release's summed effort stays within its capacity. The
scalarized objective G(x, alpha) = alpha * TS + (alpha - 1) * TDS turns the
bi-objective search into a family of single-objective problems.
"""

from dataclasses import dataclass

from .errors import ArpError
from .model import FEASIBILITY_TOL, Feature, Plan, ReleaseConfig, validate_config


@dataclass(frozen=True, slots=True)
class ArpInstance:
    """A planning problem: valued features plus a validated release config."""

    features: tuple[Feature, ...]
    config: ReleaseConfig

    def __post_init__(self):
        object.__setattr__(self, "features", tuple(self.features))
        if len(self.features) == 0:
            raise ArpError("EMPTY_INSTANCE", "an instance needs at least one feature")
        ids = [f.id for f in self.features]
        if len(set(ids)) != len(ids):
            raise ArpError("DUPLICATE_FEATURE_ID", "feature ids must be unique")
        validate_config(self.config)

    @property
    def n_features(self) -> int:
        return len(self.features)

    def feature_ids(self) -> tuple[int, ...]:
        return tuple(f.id for f in self.features)


def _check_assignment(assignment, instance: ArpInstance) -> None:
    k = instance.config.k_releases
    if len(assignment) != instance.n_features:
        raise ArpError(
            "INDEX_OUT_OF_RANGE",
            f"assignment length {len(assignment)} != {instance.n_features} features",
        )
    for pos, x in enumerate(assignment):
        if not 1 <= x <= k + 1:
            raise ArpError("INDEX_OUT_OF_RANGE", f"assignment[{pos}] = {x} outside 1..{k + 1}")


def evaluate_assignment(assignment, instance: ArpInstance) -> tuple[float, float, tuple[float, ...]]:
    """Compute (TS, TDS, effort per release) for an assignment vector."""
    _check_assignment(assignment, instance)
    cfg = instance.config
    k = cfg.k_releases
    w, z = cfg.sat_discounts, cfg.dissat_discounts
    ts = 0.0
    tds = 0.0
    effort_used = [0.0] * k
    for f, x in zip(instance.features, assignment):
        if x <= k:
            ts += w[x - 1] * f.sat_value
            effort_used[x - 1] += f.effort
        tds += z[x - 1] * f.dissat_value
    return ts, tds, tuple(effort_used)


def make_plan(assignment, instance: ArpInstance) -> Plan:
    """Build a Plan with cached objective values from an assignment vector."""
    ts, tds, effort_used = evaluate_assignment(assignment, instance)
    return Plan(
        assignment=tuple(assignment),
        feature_ids=instance.feature_ids(),
        total_satisfaction=ts,
        total_dissatisfaction=tds,
        effort_used=effort_used,
    )


def total_satisfaction(plan: Plan, instance: ArpInstance) -> float:
    return evaluate_assignment(plan.assignment, instance)[0]


def total_dissatisfaction(plan: Plan, instance: ArpInstance) -> float:
    return evaluate_assignment(plan.assignment, instance)[1]


def is_feasible(plan: Plan, instance: ArpInstance) -> bool:
    """True iff every release's summed effort fits its capacity (postponement is free)."""
    _check_assignment(plan.assignment, instance)
    cfg = instance.config
    k = cfg.k_releases
    load = [0.0] * k
    for f, x in zip(instance.features, plan.assignment):
        if x <= k:
            load[x - 1] += f.effort
    return all(load[r] <= cfg.capacities[r] + FEASIBILITY_TOL for r in range(k))


def dominates(p1: tuple[float, float], p2: tuple[float, float]) -> bool:
    """True iff p1 = (TS, TDS) is at least as good as p2 on both axes and differs."""
    ts1, tds1 = p1
    ts2, tds2 = p2
    return ts1 >= ts2 and tds1 <= tds2 and (ts1, tds1) != (ts2, tds2)


def pareto_filter(plans: list[Plan]) -> list[Plan]:
    """Keep exactly the plans not dominated by any other input plan.

    Assignment-identical duplicates collapse to the first occurrence;
    value-tied but structurally distinct plans are all retained. Input order
    is preserved.
    """
    unique: list[Plan] = []
    seen: set[tuple[int, ...]] = set()
    for p in plans:
        if p.assignment not in seen:
            seen.add(p.assignment)
            unique.append(p)
    return [
        p
        for p in unique
        if not any(dominates(q.values(), p.values()) for q in unique if q is not p)
    ]


def check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ArpError("ALPHA_OUT_OF_RANGE", f"alpha must be in the open interval (0, 1), got {alpha}")


def scalarized_objective(plan: Plan, instance: ArpInstance, alpha: float) -> float:
    """G(x, alpha) = alpha * TS(x) + (alpha - 1) * TDS(x), recomputed from the assignment."""
    check_alpha(alpha)
    ts, tds, _ = evaluate_assignment(plan.assignment, instance)
    return alpha * ts + (alpha - 1.0) * tds
