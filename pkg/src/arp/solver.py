"""Exact maximization of the scalarized objective, plus brute-force oracles.

The exact solver is a depth-first branch-and-bound over features. Rewriting
G(x, alpha) per feature gives

    G = sum_n gain(n, x(n)) - (1 - alpha) * sum_n DS(n)
    gain(n, k) = alpha * w(k) * S(n) + (1 - alpha) * (1 - z(k)) * DS(n)

so postponement contributes gain 0 and the trailing constant is folded back in
at the end. Features are branched in descending order of their best-case gain
gain(n, 1) (ties by ascending id); each node tries releases 1..K then
postponement. The node bound adds the remaining features' best-case gains
while ignoring capacity, which relaxes the feasibility constraint and is
therefore admissible. Search runs to completion, so optimality is proven;
ties are resolved by the first optimum found in this fixed order, making
results deterministic across runs and thread counts.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ArpError
from .model import FEASIBILITY_TOL, Plan
from .planning import ArpInstance, check_alpha, make_plan, scalarized_objective

PRUNE_TOL = 1e-12
ORACLE_TOL = 1e-9
BRUTE_FORCE_LIMIT = 10_000_000
_CHUNK = 1 << 17


@dataclass(frozen=True, slots=True)
class SolveReport:
    """Result of one exact solve; ``proven_optimal`` is always True here."""

    plan: Plan
    objective: float
    nodes_explored: int
    alpha: float
    proven_optimal: bool = field(default=True)


def solve_scalarized(instance: ArpInstance, alpha: float) -> SolveReport:
    """Maximize G(x, alpha) over feasible plans by branch-and-bound."""
    check_alpha(alpha)
    cfg = instance.config
    feats = instance.features
    n = len(feats)
    k = cfg.k_releases
    w, z = cfg.sat_discounts, cfg.dissat_discounts

    # gains[i][j]: value of putting feature i into release j+1; j == k means
    # postponed and contributes exactly 0 because w(K+1) = 0, z(K+1) = 1.
    gains = [
        tuple(
            alpha * w[j] * f.sat_value + (1.0 - alpha) * (1.0 - z[j]) * f.dissat_value
            for j in range(k + 1)
        )
        for f in feats
    ]
    order = sorted(range(n), key=lambda i: (-gains[i][0], feats[i].id))
    suffix_best = [0.0] * (n + 1)
    for d in range(n - 1, -1, -1):
        suffix_best[d] = suffix_best[d + 1] + gains[order[d]][0]

    caps = cfg.capacities
    efforts = [f.effort for f in feats]
    used = [0.0] * k
    current = [k + 1] * n
    best_gain = -float("inf")
    best_assignment: tuple[int, ...] | None = None
    nodes = 0

    def dfs(depth: int, acc: float) -> None:
        nonlocal best_gain, best_assignment, nodes
        nodes += 1
        if acc + suffix_best[depth] <= best_gain - PRUNE_TOL:
            return
        if depth == n:
            if acc > best_gain + PRUNE_TOL:
                best_gain = acc
                best_assignment = tuple(current)
            return
        i = order[depth]
        effort = efforts[i]
        g = gains[i]
        for j in range(k):
            prev = used[j]
            if prev + effort <= caps[j] + FEASIBILITY_TOL:
                used[j] = prev + effort
                current[i] = j + 1
                dfs(depth + 1, acc + g[j])
                used[j] = prev
        current[i] = k + 1
        dfs(depth + 1, acc)

    dfs(0, 0.0)
    assert best_assignment is not None  # postponing everything is always feasible
    plan = make_plan(best_assignment, instance)
    return SolveReport(
        plan=plan,
        objective=scalarized_objective(plan, instance, alpha),
        nodes_explored=nodes,
        alpha=alpha,
    )


def _guard_size(instance: ArpInstance) -> int:
    total = (instance.config.k_releases + 1) ** instance.n_features
    if total > BRUTE_FORCE_LIMIT:
        raise ArpError(
            "INSTANCE_TOO_LARGE",
            f"{total} assignments exceed the enumeration guard of {BRUTE_FORCE_LIMIT}",
        )
    return total


def _enumerated_chunks(instance: ArpInstance):
    """Yield (ids, ts, tds, feasible) arrays over all assignments, in chunks.

    Assignment index i encodes the vector as base-(K+1) digits, most
    significant digit first; digit d means release d+1, digit K means
    postponed.
    """
    total = _guard_size(instance)
    feats = instance.features
    cfg = instance.config
    n = len(feats)
    base = cfg.k_releases + 1
    sat = np.array([f.sat_value for f in feats])
    dis = np.array([f.dissat_value for f in feats])
    eff = np.array([f.effort for f in feats])
    w = cfg.sat_discounts
    z = cfg.dissat_discounts
    divisors = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        ids = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (ids[:, None] // divisors) % base
        ts = np.zeros(len(ids))
        tds = np.zeros(len(ids))
        feasible = np.ones(len(ids), dtype=bool)
        for d in range(base):
            mask = digits == d
            if w[d] != 0.0:
                ts += w[d] * (mask @ sat)
            if z[d] != 0.0:
                tds += z[d] * (mask @ dis)
            if d < cfg.k_releases:
                feasible &= (mask @ eff) <= cfg.capacities[d] + FEASIBILITY_TOL
        yield ids, ts, tds, feasible


def _decode_assignment(index: int, n: int, base: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        digits.append(index % base)
        index //= base
    return tuple(d + 1 for d in reversed(digits))


def brute_force_scalarized(instance: ArpInstance, alpha: float) -> tuple[float, set[tuple[int, ...]]]:
    """Exhaustive optimum of G(x, alpha) with the complete argmax set.

    Returns the optimal objective and every feasible assignment whose value
    lies within ORACLE_TOL of it. Guarded to (K+1)^N <= 10^7 assignments.
    """
    check_alpha(alpha)
    n = instance.n_features
    base = instance.config.k_releases + 1
    best = -float("inf")
    candidates: list[tuple[float, int]] = []
    for ids, ts, tds, feasible in _enumerated_chunks(instance):
        g = np.where(feasible, alpha * ts - (1.0 - alpha) * tds, -np.inf)
        chunk_best = float(g.max())
        if chunk_best == -float("inf"):
            continue
        best = max(best, chunk_best)
        near = np.flatnonzero(g >= chunk_best - ORACLE_TOL)
        candidates.extend((float(g[j]), int(ids[j])) for j in near)
    argmax = {
        _decode_assignment(idx, n, base)
        for value, idx in candidates
        if value >= best - ORACLE_TOL
    }
    return best, argmax


def _pareto_mask(ts: np.ndarray, tds: np.ndarray) -> np.ndarray:
    """Boolean mask of the non-dominated points, value ties all retained."""
    m = len(ts)
    mask = np.zeros(m, dtype=bool)
    if m == 0:
        return mask
    order = np.lexsort((tds, -ts))
    sts = ts[order]
    stds = tds[order]
    new_group = np.empty(m, dtype=bool)
    new_group[0] = True
    new_group[1:] = sts[1:] != sts[:-1]
    starts = np.flatnonzero(new_group)
    group_id = np.cumsum(new_group) - 1
    group_min = stds[starts]  # sorted ascending within each equal-TS group
    best_before = np.concatenate(([np.inf], np.minimum.accumulate(group_min)[:-1]))
    keep_sorted = (stds == group_min[group_id]) & (stds < best_before[group_id])
    mask[order] = keep_sorted
    return mask


def brute_force_pareto(instance: ArpInstance) -> list[tuple[float, float, tuple[int, ...]]]:
    """Complete Pareto front over all feasible assignments.

    Returns (TS, TDS, assignment) triples sorted by ascending TS, then TDS,
    then assignment; every non-dominated assignment appears, including value
    ties. Guarded like brute_force_scalarized.
    """
    n = instance.n_features
    base = instance.config.k_releases + 1
    front_ts: list[float] = []
    front_tds: list[float] = []
    front_ids: list[int] = []
    for ids, ts, tds, feasible in _enumerated_chunks(instance):
        cand_ts = np.concatenate((np.array(front_ts), ts[feasible]))
        cand_tds = np.concatenate((np.array(front_tds), tds[feasible]))
        cand_ids = front_ids + [int(i) for i in ids[feasible]]
        keep = _pareto_mask(cand_ts, cand_tds)
        front_ts = [float(v) for v in cand_ts[keep]]
        front_tds = [float(v) for v in cand_tds[keep]]
        front_ids = [cand_ids[j] for j in np.flatnonzero(keep)]
    triples = [
        (t, d, _decode_assignment(i, n, base))
        for t, d, i in zip(front_ts, front_tds, front_ids)
    ]
    triples.sort()
    return triples
