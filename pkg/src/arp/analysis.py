"""Post-hoc plan analytics: structural diversity, manual-plan comparison,
and inter-rater agreement on plan rankings."""

from dataclasses import dataclass

from .errors import ArpError
from .model import Plan


def symmetric_difference(p1: Plan, p2: Plan) -> frozenset[int]:
    """Feature ids offered by exactly one of the two plans."""
    return p1.offered() ^ p2.offered()


def core_features(plans: list[Plan]) -> frozenset[int]:
    """Feature ids offered by every plan."""
    if not plans:
        raise ArpError("EMPTY_INSTANCE", "core features need at least one plan")
    core = plans[0].offered()
    for p in plans[1:]:
        core &= p.offered()
    return core


def compare_manual(
    manual: list[tuple[float, float]], optimized: list[tuple[float, float]]
) -> tuple[float, float]:
    """Mean improvement of optimized plans over manual plans, in percent.

    Satisfaction improvement is measured against the manual mean,
    dissatisfaction improvement (how much extra dissatisfaction the manual
    plans carry) against the optimized mean.
    """
    if not manual or not optimized:
        raise ArpError("EMPTY_INSTANCE", "both plan value lists must be non-empty")
    mean = lambda xs: sum(xs) / len(xs)
    man_ts = mean([v[0] for v in manual])
    man_tds = mean([v[1] for v in manual])
    opt_ts = mean([v[0] for v in optimized])
    opt_tds = mean([v[1] for v in optimized])
    if man_ts == 0 or opt_tds == 0:
        raise ArpError("DIVISION_BY_ZERO", "mean satisfaction/dissatisfaction of zero")
    sat_improvement = 100.0 * (opt_ts - man_ts) / man_ts
    dissat_improvement = 100.0 * (man_tds - opt_tds) / opt_tds
    return sat_improvement, dissat_improvement


@dataclass(frozen=True, slots=True)
class RankingTable:
    """Raters' rankings of a set of plans; ties are kept exactly as given."""

    raters: tuple[tuple[int, str], ...]
    subjects: tuple[str, ...]
    ranks: tuple[tuple[int, ...], ...]  # one row per rater, one column per subject

    def __post_init__(self):
        object.__setattr__(self, "raters", tuple((int(i), str(l)) for i, l in self.raters))
        object.__setattr__(self, "subjects", tuple(str(s) for s in self.subjects))
        object.__setattr__(self, "ranks", tuple(tuple(int(r) for r in row) for row in self.ranks))
        n_subjects = len(self.subjects)
        if len(self.ranks) != len(self.raters):
            raise ArpError("LENGTH_MISMATCH", "one rank row per rater required")
        for (rid, _), row in zip(self.raters, self.ranks):
            if len(row) != n_subjects:
                raise ArpError("LENGTH_MISMATCH", f"rater {rid}: expected {n_subjects} ranks")
            for r in row:
                if not 1 <= r <= n_subjects:
                    raise ArpError("INVALID_RANK", f"rater {rid}: rank {r} outside 1..{n_subjects}")


def fleiss_kappa(table: RankingTable) -> float:
    """Fleiss' kappa over a ranking table.

    Each plan is an item and each rank value a category; cell counts are the
    number of raters assigning that rank to that plan, tied ranks included
    verbatim. When every rater gives every plan the same rank the expected
    agreement reaches 1 and the observed agreement equals it; that degenerate
    table returns 1.0 by convention.
    """
    n_raters = len(table.raters)
    n_subjects = len(table.subjects)
    if n_raters < 2 or n_subjects < 2:
        raise ArpError("DEGENERATE_TABLE", "kappa needs at least two raters and two subjects")

    counts = [[0] * n_subjects for _ in range(n_subjects)]  # [subject][rank-1]
    for row in table.ranks:
        for subject, rank in enumerate(row):
            counts[subject][rank - 1] += 1

    per_subject_agreement = [
        (sum(c * c for c in subject_counts) - n_raters) / (n_raters * (n_raters - 1))
        for subject_counts in counts
    ]
    observed = sum(per_subject_agreement) / n_subjects
    totals = [sum(counts[s][c] for s in range(n_subjects)) for c in range(n_subjects)]
    proportions = [t / (n_subjects * n_raters) for t in totals]
    expected = sum(p * p for p in proportions)
    if abs(1.0 - expected) < 1e-12:
        return 1.0
    return (observed - expected) / (1.0 - expected)
