"""Core domain types for asymmetric release planning.

All types are immutable after construction and safe to share across threads.
Feature ids are 1-based everywhere, including file formats. Efforts and
capacities are decimals; feasibility comparisons use ``FEASIBILITY_TOL``,
which sits far below the one-decimal resolution of typical effort data.
"""

from dataclasses import dataclass

from .errors import ArpError

FEASIBILITY_TOL = 1e-9
CACHE_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Feature:
    """A candidate feature with effort and its two value scores.

    ``sat_value`` measures the satisfaction created by offering the feature,
    ``dissat_value`` the dissatisfaction created by withholding it. The two
    are independent; Kano-derived values lie in [0, 1].
    """

    id: int
    name: str
    effort: float
    sat_value: float
    dissat_value: float

    def __post_init__(self):
        object.__setattr__(self, "effort", float(self.effort))
        object.__setattr__(self, "sat_value", float(self.sat_value))
        object.__setattr__(self, "dissat_value", float(self.dissat_value))
        if self.effort < 0:
            raise ArpError("INVALID_FEATURE", f"feature {self.id}: effort must be >= 0")
        if self.sat_value < 0 or self.dissat_value < 0:
            raise ArpError("INVALID_FEATURE", f"feature {self.id}: value scores must be >= 0")


@dataclass(frozen=True, slots=True)
class Stakeholder:
    """A rater. Weight 0 removes the stakeholder from every weighted aggregation."""

    id: int
    weight: int

    def __post_init__(self):
        if isinstance(self.weight, bool) or not isinstance(self.weight, int):
            raise ArpError("INVALID_STAKEHOLDER", f"stakeholder {self.id}: weight must be an integer")
        if not 0 <= self.weight <= 9:
            raise ArpError("INVALID_STAKEHOLDER", f"stakeholder {self.id}: weight must be in 0..9")


@dataclass(frozen=True, slots=True)
class ReleaseConfig:
    """Planning horizon: K releases, per-release capacities, discount vectors.

    ``sat_discounts`` (w) and ``dissat_discounts`` (z) carry K+1 entries; the
    last entry is the postponement bucket. Validation enforces
    w(1)=1 > ... > w(K+1)=0 and z(1)=0 < ... < z(K+1)=1. For K=1 the vectors
    are forced to (1,0) and (0,1) and may be omitted; for K>=2 they must be
    supplied explicitly.
    """

    k_releases: int
    capacities: tuple[float, ...]
    sat_discounts: tuple[float, ...] | None = None
    dissat_discounts: tuple[float, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "capacities", tuple(float(c) for c in self.capacities))
        if self.k_releases == 1 and self.sat_discounts is None:
            object.__setattr__(self, "sat_discounts", (1.0, 0.0))
        if self.k_releases == 1 and self.dissat_discounts is None:
            object.__setattr__(self, "dissat_discounts", (0.0, 1.0))
        if self.sat_discounts is not None:
            object.__setattr__(self, "sat_discounts", tuple(float(v) for v in self.sat_discounts))
        if self.dissat_discounts is not None:
            object.__setattr__(self, "dissat_discounts", tuple(float(v) for v in self.dissat_discounts))
        validate_config(self)

    @classmethod
    def single_release(cls, capacity: float) -> "ReleaseConfig":
        return cls(k_releases=1, capacities=(capacity,))


_BOUNDARY_TOL = 1e-12


def validate_config(config: ReleaseConfig) -> ReleaseConfig:
    """Check the discount-vector and capacity invariants; return the config.

    Raises ArpError with code LENGTH_MISMATCH, BOUNDARY_VIOLATION, or
    MONOTONICITY_VIOLATION (naming the offending index) on the first failure.
    """
    k = config.k_releases
    if k < 1:
        raise ArpError("LENGTH_MISMATCH", "k_releases must be >= 1")
    if len(config.capacities) != k:
        raise ArpError("LENGTH_MISMATCH", f"expected {k} capacities, got {len(config.capacities)}")
    for idx, cap in enumerate(config.capacities, start=1):
        if cap < 0:
            raise ArpError("LENGTH_MISMATCH", f"capacity for release {idx} must be >= 0")
    if config.sat_discounts is None or config.dissat_discounts is None:
        raise ArpError("LENGTH_MISMATCH", f"discount vectors must be supplied explicitly for K={k}")
    w, z = config.sat_discounts, config.dissat_discounts
    if len(w) != k + 1:
        raise ArpError("LENGTH_MISMATCH", f"expected {k + 1} satisfaction discounts, got {len(w)}")
    if len(z) != k + 1:
        raise ArpError("LENGTH_MISMATCH", f"expected {k + 1} dissatisfaction discounts, got {len(z)}")
    if abs(w[0] - 1.0) > _BOUNDARY_TOL or abs(w[k]) > _BOUNDARY_TOL:
        raise ArpError("BOUNDARY_VIOLATION", f"satisfaction discounts must start at 1 and end at 0, got {w}")
    if abs(z[0]) > _BOUNDARY_TOL or abs(z[k] - 1.0) > _BOUNDARY_TOL:
        raise ArpError("BOUNDARY_VIOLATION", f"dissatisfaction discounts must start at 0 and end at 1, got {z}")
    for i in range(k):
        if not w[i] > w[i + 1]:
            raise ArpError("MONOTONICITY_VIOLATION", f"satisfaction discounts must strictly decrease at index {i + 1}")
        if not z[i] < z[i + 1]:
            raise ArpError("MONOTONICITY_VIOLATION", f"dissatisfaction discounts must strictly increase at index {i + 1}")
    return config


@dataclass(frozen=True, slots=True)
class Plan:
    """An assignment of every feature to a release 1..K or to K+1 (postponed).

    ``assignment`` is parallel to ``feature_ids``; ``effort_used`` has one
    entry per release (postponement consumes no capacity). The cached
    ``total_satisfaction``/``total_dissatisfaction`` equal recomputation from
    the assignment within CACHE_TOL for plans built via planning.make_plan.
    """

    assignment: tuple[int, ...]
    feature_ids: tuple[int, ...]
    total_satisfaction: float
    total_dissatisfaction: float
    effort_used: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(x) for x in self.assignment))
        object.__setattr__(self, "feature_ids", tuple(int(i) for i in self.feature_ids))
        object.__setattr__(self, "effort_used", tuple(float(e) for e in self.effort_used))
        if len(self.assignment) != len(self.feature_ids):
            raise ArpError("INDEX_OUT_OF_RANGE", "assignment and feature_ids lengths differ")

    @property
    def k_releases(self) -> int:
        return len(self.effort_used)

    def values(self) -> tuple[float, float]:
        return (self.total_satisfaction, self.total_dissatisfaction)

    def offered(self) -> frozenset[int]:
        """Ids of features assigned to a real release (not postponed)."""
        k = self.k_releases
        return frozenset(fid for fid, x in zip(self.feature_ids, self.assignment) if x <= k)

    def offered_by_release(self) -> dict[int, tuple[int, ...]]:
        k = self.k_releases
        out: dict[int, list[int]] = {r: [] for r in range(1, k + 1)}
        for fid, x in zip(self.feature_ids, self.assignment):
            if x <= k:
                out[x].append(fid)
        return {r: tuple(ids) for r, ids in out.items()}


@dataclass(frozen=True, slots=True)
class ParetoResult:
    """Deduplicated trade-off plans with their stability intervals.

    ``stability`` is parallel to ``plans``: for each plan, the maximal runs of
    consecutive grid alphas that returned it, as closed [lo, hi] intervals.
    Intervals of distinct plans are disjoint and jointly cover ``alpha_grid``.
    """

    plans: tuple[Plan, ...]
    stability: tuple[tuple[tuple[float, float], ...], ...]
    alpha_grid: tuple[float, ...]

    def __post_init__(self):
        if len(self.plans) != len(self.stability):
            raise ArpError("LENGTH_MISMATCH", "plans and stability lists must be parallel")
