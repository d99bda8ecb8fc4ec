"""Trade-off sweep: solve the scalarized problem over an alpha grid.

The grid is {step, 2*step, ...} strictly inside (0, 1); the endpoints are
excluded because they ignore one objective entirely and can mask ties. Plans
are deduplicated by assignment vector (value-tied but structurally distinct
plans are kept apart), stability is recorded as the maximal runs of
consecutive grid alphas returning the same plan, and the final set is
Pareto-filtered defensively even though weighted-sum optima are already
non-dominated.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import ArpError
from .model import ParetoResult, Plan
from .planning import ArpInstance, pareto_filter
from .solver import solve_scalarized

DEFAULT_STEP = 0.001


@dataclass(frozen=True, slots=True)
class SweepConfig:
    """Grid resolution for the sweep; 0.001 already saturates typical instances."""

    step: float = DEFAULT_STEP

    def __post_init__(self):
        if not 0.0 < self.step < 0.5:
            raise ArpError("INVALID_STEP", f"step must be in (0, 0.5), got {self.step}")


def alpha_grid(step: float) -> tuple[float, ...]:
    """All multiples of ``step`` strictly inside (0, 1)."""
    if not 0.0 < step < 0.5:
        raise ArpError("INVALID_STEP", f"step must be in (0, 0.5), got {step}")
    out = []
    i = 1
    while True:
        a = i * step
        if a >= 1.0 - 1e-12:
            break
        out.append(a)
        i += 1
    return tuple(out)


def sdo_sweep(instance: ArpInstance, sweep: SweepConfig | None = None, workers: int = 1) -> ParetoResult:
    """Run the exact solver across the alpha grid and collect the trade-off set.

    Grid points are independent, so solves may fan out over ``workers``
    threads; results are merged in grid order either way, keeping stability
    intervals deterministic.
    """
    sweep = sweep or SweepConfig()
    grid = alpha_grid(sweep.step)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda a: solve_scalarized(instance, a), grid))
    else:
        reports = [solve_scalarized(instance, a) for a in grid]

    first_seen: dict[tuple[int, ...], Plan] = {}
    appearance: list[tuple[int, ...]] = []
    runs: dict[tuple[int, ...], list[list[int]]] = {}
    prev_key: tuple[int, ...] | None = None
    for idx, report in enumerate(reports):
        key = report.plan.assignment
        if key not in first_seen:
            first_seen[key] = report.plan
            appearance.append(key)
            runs[key] = []
        if key == prev_key:
            runs[key][-1][1] = idx
        else:
            runs[key].append([idx, idx])
        prev_key = key

    plans = [first_seen[key] for key in appearance]
    kept = pareto_filter(plans)
    kept_keys = [p.assignment for p in kept]
    stability = tuple(
        tuple((grid[lo], grid[hi]) for lo, hi in runs[key]) for key in kept_keys
    )
    return ParetoResult(plans=tuple(kept), stability=stability, alpha_grid=grid)


def exact_breakpoints(result: ParetoResult) -> list[float]:
    """Analytical alphas where adjacent trade-off plans tie on G.

    Plans are ordered by ascending TS; for each adjacent pair the breakpoint
    is dTDS / (dTS + dTDS) with deltas taken higher-minus-lower. Requires at
    least two plans; identical-value neighbours make the pair degenerate.
    """
    if len(result.plans) < 2:
        raise ArpError("NOT_ENOUGH_PLANS", "breakpoints need at least two plans")
    ordered = sorted(result.plans, key=lambda p: (p.total_satisfaction, p.total_dissatisfaction, p.assignment))
    breakpoints = []
    for lo, hi in zip(ordered, ordered[1:]):
        d_ts = hi.total_satisfaction - lo.total_satisfaction
        d_tds = hi.total_dissatisfaction - lo.total_dissatisfaction
        denom = d_ts + d_tds
        if denom == 0:
            raise ArpError(
                "DEGENERATE_PAIR",
                f"plans with values ({lo.total_satisfaction}, {lo.total_dissatisfaction}) and "
                f"({hi.total_satisfaction}, {hi.total_dissatisfaction}) admit no breakpoint",
            )
        breakpoints.append(d_tds / denom)
    return breakpoints
