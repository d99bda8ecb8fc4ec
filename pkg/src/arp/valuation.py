"""Per-feature satisfaction/dissatisfaction values from stakeholder input.

Three elicitation routes produce the S(n)/DS(n) scores consumed by planning:

* one-point estimates on a nine-point scale, aggregated by stakeholder-weighted
  averages;
* pairwise comparison matrices (AHP), reduced to priority vectors via the
  principal eigenvector and aggregated per stakeholder;
* continuous Kano questionnaires, where each stakeholder distributes mass over
  the five functional and five dysfunctional answers. Joint answer mass maps
  to the six Kano attributes, is weight-averaged across stakeholders, and is
  reduced to S = (A+O)/(A+O+M+I) and DS = (M+O)/(A+O+M+I).

Traditional single-answer Kano classification, product-level coefficients, and
three-point (PERT) effort aggregation live here as well.
"""

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ArpError
from .model import Stakeholder

_SUM_TOL = 1e-9


def pert_effort(optimistic: float, most_likely: float, pessimistic: float) -> float:
    """Three-point effort estimate with 1-4-1 weighting: (o + 4m + p) / 6."""
    if not 0 <= optimistic <= most_likely <= pessimistic:
        raise ArpError(
            "ORDERING_VIOLATION",
            f"estimates must satisfy 0 <= optimistic <= most_likely <= pessimistic, got "
            f"({optimistic}, {most_likely}, {pessimistic})",
        )
    return (optimistic + 4.0 * most_likely + pessimistic) / 6.0


def _weighted_mean(values, weights) -> float:
    """Weighted mean over raters with positive weight.

    This is the single aggregation engine behind every stakeholder-weighted
    average in the package; weight-0 raters are excluded from numerator and
    denominator alike.
    """
    total = 0.0
    wsum = 0.0
    for v, w in zip(values, weights):
        if w > 0:
            total += w * v
            wsum += w
    if wsum == 0:
        raise ArpError("ALL_WEIGHTS_ZERO", "no stakeholder with positive weight")
    return total / wsum


# ---------------------------------------------------------------------------
# One-point estimates


@dataclass(frozen=True, slots=True)
class OnePointResponse:
    """One stakeholder's nine-point satisfaction/dissatisfaction scores for one feature."""

    feature_id: int
    stakeholder_id: int
    sat: int
    dissat: int

    def __post_init__(self):
        for field_name, score in (("sat", self.sat), ("dissat", self.dissat)):
            if isinstance(score, bool) or not isinstance(score, int) or not 1 <= score <= 9:
                raise ArpError(
                    "INVALID_RESPONSE",
                    f"feature {self.feature_id}, stakeholder {self.stakeholder_id}: "
                    f"{field_name} must be an integer in 1..9",
                )


def one_point_values(
    responses: list[OnePointResponse], stakeholders: list[Stakeholder]
) -> dict[int, tuple[float, float]]:
    """Weighted-average S(n) and DS(n) per feature from one-point scores.

    Every (feature, stakeholder) pair with stakeholder weight > 0 must be
    covered exactly once.
    """
    weight_of = {s.id: s.weight for s in stakeholders}
    active = sorted(sid for sid, w in weight_of.items() if w > 0)
    if not active:
        raise ArpError("ALL_WEIGHTS_ZERO", "no stakeholder with positive weight")

    by_feature: dict[int, dict[int, OnePointResponse]] = {}
    for r in responses:
        if r.stakeholder_id not in weight_of:
            raise ArpError("MISSING_RESPONSE", f"response from unknown stakeholder {r.stakeholder_id}")
        if weight_of[r.stakeholder_id] == 0:
            continue
        per = by_feature.setdefault(r.feature_id, {})
        if r.stakeholder_id in per:
            raise ArpError(
                "DUPLICATE_RESPONSE",
                f"feature {r.feature_id}, stakeholder {r.stakeholder_id}: more than one response",
            )
        per[r.stakeholder_id] = r

    out: dict[int, tuple[float, float]] = {}
    for fid in sorted(by_feature):
        per = by_feature[fid]
        missing = [sid for sid in active if sid not in per]
        if missing:
            raise ArpError("MISSING_RESPONSE", f"feature {fid}: no response from stakeholder {missing[0]}")
        weights = [weight_of[sid] for sid in active]
        s = _weighted_mean([per[sid].sat for sid in active], weights)
        ds = _weighted_mean([per[sid].dissat for sid in active], weights)
        out[fid] = (s, ds)
    return out


# ---------------------------------------------------------------------------
# AHP pairwise comparison


class Perspective(Enum):
    SAT = "sat"
    DISSAT = "dissat"


@dataclass(frozen=True, slots=True)
class AhpMatrix:
    """One stakeholder's pairwise comparison matrix for one perspective.

    Entries follow the 1..9 preference scale with reciprocal symmetry:
    M(n, m) = 1 / M(m, n) and unit diagonal.
    """

    stakeholder_id: int
    perspective: Perspective
    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(float(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ArpError("NON_RECIPROCAL", f"stakeholder {self.stakeholder_id}: matrix is not square")
        for i in range(n):
            if abs(entries[i][i] - 1.0) > _SUM_TOL:
                raise ArpError("NON_RECIPROCAL", f"stakeholder {self.stakeholder_id}: diagonal entry ({i + 1},{i + 1}) != 1")
            for j in range(n):
                v = entries[i][j]
                if not (1.0 / 9.0 - 1e-9 <= v <= 9.0 + 1e-9):
                    raise ArpError(
                        "ENTRY_OUT_OF_RANGE",
                        f"stakeholder {self.stakeholder_id}: entry ({i + 1},{j + 1}) = {v} outside [1/9, 9]",
                    )
                if abs(entries[j][i] - 1.0 / v) > _SUM_TOL:
                    raise ArpError(
                        "NON_RECIPROCAL",
                        f"stakeholder {self.stakeholder_id}: entry ({j + 1},{i + 1}) is not the reciprocal of ({i + 1},{j + 1})",
                    )

    @property
    def size(self) -> int:
        return len(self.entries)


# Random inconsistency indices (Saaty); beyond order 15 the index has
# essentially flattened out.
_RANDOM_INDEX = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12, 6: 1.24, 7: 1.32, 8: 1.41,
    9: 1.45, 10: 1.49, 11: 1.51, 12: 1.48, 13: 1.56, 14: 1.57, 15: 1.59,
}

_POWER_ITER_TOL = 1e-10
_POWER_ITER_MAX = 1000
CONSISTENCY_WARN_THRESHOLD = 0.1


def ahp_priorities(matrix: AhpMatrix) -> tuple[tuple[float, ...], float]:
    """Priority vector (principal eigenvector, sum 1) and consistency ratio.

    The eigenvector is found by power iteration. CR = CI / RI with
    CI = (lambda_max - N) / (N - 1); matrices of order <= 2 are always
    consistent. A CR above 0.1 triggers a warning, never an error.
    """
    m = np.array(matrix.entries, dtype=float)
    n = m.shape[0]
    v = np.full(n, 1.0 / n)
    lam = float(n)
    for _ in range(_POWER_ITER_MAX):
        nxt = m @ v
        total = nxt.sum()
        nxt = nxt / total
        if np.max(np.abs(nxt - v)) < _POWER_ITER_TOL:
            v = nxt
            lam = float(np.mean((m @ v) / v))
            break
        v = nxt
    else:
        raise ArpError("NO_CONVERGENCE", f"power iteration did not converge in {_POWER_ITER_MAX} steps")

    if n <= 2:
        cr = 0.0
    else:
        ci = (lam - n) / (n - 1)
        cr = ci / _RANDOM_INDEX.get(n, 1.6)
    if cr > CONSISTENCY_WARN_THRESHOLD:
        warnings.warn(
            f"stakeholder {matrix.stakeholder_id} ({matrix.perspective.value}): consistency ratio {cr:.3f} exceeds 0.1",
            stacklevel=2,
        )
    return tuple(float(x) for x in v), float(cr)


def ahp_values(
    matrices: list[AhpMatrix], stakeholders: list[Stakeholder]
) -> tuple[list[tuple[float, float]], dict[tuple[int, str], float]]:
    """Per-feature (S, DS) from per-stakeholder AHP matrices.

    Each weight>0 stakeholder must supply exactly one matrix per perspective.
    Priorities are derived per stakeholder and then weight-averaged, mirroring
    the one-point aggregation. Returns the value pairs in matrix row order
    plus the consistency ratio per (stakeholder, perspective).
    """
    weight_of = {s.id: s.weight for s in stakeholders}
    active = sorted(sid for sid, w in weight_of.items() if w > 0)
    if not active:
        raise ArpError("ALL_WEIGHTS_ZERO", "no stakeholder with positive weight")

    sizes = {m.size for m in matrices}
    if len(sizes) > 1:
        raise ArpError("LENGTH_MISMATCH", "all comparison matrices must have the same size")

    by_key: dict[tuple[int, Perspective], AhpMatrix] = {}
    for m in matrices:
        if m.stakeholder_id not in weight_of:
            raise ArpError("MISSING_RESPONSE", f"matrix from unknown stakeholder {m.stakeholder_id}")
        key = (m.stakeholder_id, m.perspective)
        if key in by_key:
            raise ArpError("DUPLICATE_RESPONSE", f"stakeholder {m.stakeholder_id}: duplicate {m.perspective.value} matrix")
        by_key[key] = m

    n = next(iter(sizes)) if sizes else 0
    consistency: dict[tuple[int, str], float] = {}
    prios: dict[Perspective, dict[int, tuple[float, ...]]] = {Perspective.SAT: {}, Perspective.DISSAT: {}}
    for sid in active:
        for persp in (Perspective.SAT, Perspective.DISSAT):
            m = by_key.get((sid, persp))
            if m is None:
                raise ArpError("MISSING_RESPONSE", f"stakeholder {sid}: no {persp.value} comparison matrix")
            vec, cr = ahp_priorities(m)
            prios[persp][sid] = vec
            consistency[(sid, persp.value)] = cr

    weights = [weight_of[sid] for sid in active]
    values = []
    for i in range(n):
        s = _weighted_mean([prios[Perspective.SAT][sid][i] for sid in active], weights)
        ds = _weighted_mean([prios[Perspective.DISSAT][sid][i] for sid in active], weights)
        values.append((s, ds))
    return values, consistency


# ---------------------------------------------------------------------------
# Kano model


class KanoChoice(Enum):
    LIKE = 1
    MUST_BE = 2
    NEUTRAL = 3
    LIVE_WITH = 4
    DISLIKE = 5


class KanoAttribute(Enum):
    ATTRACTIVE = "A"
    ONE_DIMENSIONAL = "O"
    MUST_BE = "M"
    INDIFFERENT = "I"
    REVERSE = "R"
    QUESTIONABLE = "Q"


# Joint classification of (functional, dysfunctional) answers. Rows are the
# functional answer, columns the dysfunctional answer, both ordered
# like / must-be / neutral / live-with / dislike.
_KANO_GRID = (
    ("Q", "A", "A", "A", "O"),
    ("R", "I", "I", "I", "M"),
    ("R", "I", "I", "I", "M"),
    ("R", "I", "I", "I", "M"),
    ("R", "R", "R", "R", "Q"),
)


def classify_traditional(functional: KanoChoice | int, dysfunctional: KanoChoice | int) -> KanoAttribute:
    """Single-answer Kano classification via the 5x5 evaluation grid."""
    f = functional.value if isinstance(functional, KanoChoice) else int(functional)
    d = dysfunctional.value if isinstance(dysfunctional, KanoChoice) else int(dysfunctional)
    if not (1 <= f <= 5 and 1 <= d <= 5):
        raise ArpError("INVALID_RESPONSE", "answers must be in 1..5")
    return KanoAttribute(_KANO_GRID[f - 1][d - 1])


def product_coefficients(counts: dict[KanoAttribute | str, int]) -> tuple[float, float]:
    """Product-level satisfaction/dissatisfaction coefficients from attribute counts.

    sat = (#A + #O) / (#A + #O + #M + #I), dissat = (#M + #O) / same.
    Reverse and Questionable counts are excluded from the analysis.
    """
    def get(attr: KanoAttribute) -> int:
        return counts.get(attr, counts.get(attr.value, 0))

    a, o, m, i = (get(x) for x in (KanoAttribute.ATTRACTIVE, KanoAttribute.ONE_DIMENSIONAL,
                                   KanoAttribute.MUST_BE, KanoAttribute.INDIFFERENT))
    denom = a + o + m + i
    if denom <= 0:
        raise ArpError("DEGENERATE_PRODUCT", "no A/O/M/I classifications to aggregate")
    return (a + o) / denom, (m + o) / denom


@dataclass(frozen=True, slots=True)
class KanoResponse:
    """One stakeholder's mass allocation over the five answers per question.

    ``functional`` and ``dysfunctional`` each hold five non-negative numbers
    (percentages or fractions); ``normalize_kano`` makes them sum to 1.
    """

    feature_id: int
    stakeholder_id: int
    functional: tuple[float, ...]
    dysfunctional: tuple[float, ...]

    def __post_init__(self):
        for name, alloc in (("functional", self.functional), ("dysfunctional", self.dysfunctional)):
            alloc = tuple(float(v) for v in alloc)
            object.__setattr__(self, name, alloc)
            if len(alloc) != 5:
                raise ArpError("INVALID_RESPONSE", f"{name} allocation must have 5 entries")
            if any(v < 0 for v in alloc):
                raise ArpError("INVALID_RESPONSE", f"{name} allocation must be non-negative")

    def is_normalized(self) -> bool:
        return abs(sum(self.functional) - 1.0) <= _SUM_TOL and abs(sum(self.dysfunctional) - 1.0) <= _SUM_TOL


def normalize_kano(raw: KanoResponse) -> KanoResponse:
    """Scale both allocations to sum to 1 (accepts percentages or fractions)."""
    sums = (sum(raw.functional), sum(raw.dysfunctional))
    for name, total in zip(("functional", "dysfunctional"), sums):
        if total <= 0:
            raise ArpError(
                "ZERO_ALLOCATION",
                f"feature {raw.feature_id}, stakeholder {raw.stakeholder_id}: {name} answers sum to 0",
            )
    return KanoResponse(
        feature_id=raw.feature_id,
        stakeholder_id=raw.stakeholder_id,
        functional=tuple(v / sums[0] for v in raw.functional),
        dysfunctional=tuple(v / sums[1] for v in raw.dysfunctional),
    )


@dataclass(frozen=True, slots=True)
class KanoScore:
    """Kano attribute mass of one (feature, stakeholder) pair; the six parts sum to 1."""

    feature_id: int
    stakeholder_id: int
    a: float
    o: float
    m: float
    i: float
    r: float
    q: float

    def __post_init__(self):
        parts = (self.a, self.o, self.m, self.i, self.r, self.q)
        if any(p < -_SUM_TOL or p > 1 + _SUM_TOL for p in parts):
            raise ArpError("INVALID_RESPONSE", "attribute scores must lie in [0, 1]")
        if abs(sum(parts) - 1.0) > _SUM_TOL:
            raise ArpError("INVALID_RESPONSE", f"attribute scores must sum to 1, got {sum(parts)!r}")


def kano_scores(response: KanoResponse) -> KanoScore:
    """Attribute mass from a normalized response: sum of U_row * D_col per grid cell."""
    if not response.is_normalized():
        raise ArpError(
            "NOT_NORMALIZED",
            f"feature {response.feature_id}, stakeholder {response.stakeholder_id}: "
            "response must be normalized first",
        )
    acc = {"A": 0.0, "O": 0.0, "M": 0.0, "I": 0.0, "R": 0.0, "Q": 0.0}
    for fi, u in enumerate(response.functional):
        for di, d in enumerate(response.dysfunctional):
            acc[_KANO_GRID[fi][di]] += u * d
    return KanoScore(
        feature_id=response.feature_id,
        stakeholder_id=response.stakeholder_id,
        a=acc["A"], o=acc["O"], m=acc["M"], i=acc["I"], r=acc["R"], q=acc["Q"],
    )


@dataclass(frozen=True, slots=True)
class FeatureKanoProfile:
    """Weight-averaged attribute mass of one feature plus its derived S/DS values.

    ``f_r``/``f_q`` are retained for diagnostics but excluded from the S/DS
    denominators.
    """

    feature_id: int
    f_a: float
    f_o: float
    f_m: float
    f_i: float
    f_r: float
    f_q: float
    s: float
    ds: float


def aggregate_kano(scores: list[KanoScore], stakeholders: list[Stakeholder]) -> FeatureKanoProfile:
    """Aggregate one feature's per-stakeholder scores into a profile.

    Requires exactly one score per weight>0 stakeholder. Raises
    DEGENERATE_FEATURE when the entire aggregated mass sits in R/Q: silently
    reporting S = DS = 0 would hide a data problem.
    """
    if not scores:
        raise ArpError("MISSING_RESPONSE", "no scores supplied")
    fid = scores[0].feature_id
    weight_of = {s.id: s.weight for s in stakeholders}
    active = sorted(sid for sid, w in weight_of.items() if w > 0)
    if not active:
        raise ArpError("ALL_WEIGHTS_ZERO", "no stakeholder with positive weight")

    per: dict[int, KanoScore] = {}
    for sc in scores:
        if sc.feature_id != fid:
            raise ArpError("INVALID_RESPONSE", "scores for more than one feature supplied")
        if sc.stakeholder_id in per:
            raise ArpError("DUPLICATE_RESPONSE", f"feature {fid}, stakeholder {sc.stakeholder_id}: duplicate score")
        per[sc.stakeholder_id] = sc
    missing = [sid for sid in active if sid not in per]
    if missing:
        raise ArpError("MISSING_RESPONSE", f"feature {fid}: no score from stakeholder {missing[0]}")

    weights = [weight_of[sid] for sid in active]
    f_a = _weighted_mean([per[sid].a for sid in active], weights)
    f_o = _weighted_mean([per[sid].o for sid in active], weights)
    f_m = _weighted_mean([per[sid].m for sid in active], weights)
    f_i = _weighted_mean([per[sid].i for sid in active], weights)
    f_r = _weighted_mean([per[sid].r for sid in active], weights)
    f_q = _weighted_mean([per[sid].q for sid in active], weights)

    denom = f_a + f_o + f_m + f_i
    if denom <= 1e-12 or not math.isfinite(denom):
        raise ArpError("DEGENERATE_FEATURE", f"feature {fid}: all response mass is Reverse/Questionable")
    return FeatureKanoProfile(
        feature_id=fid,
        f_a=f_a, f_o=f_o, f_m=f_m, f_i=f_i, f_r=f_r, f_q=f_q,
        s=(f_a + f_o) / denom,
        ds=(f_m + f_o) / denom,
    )


def kano_values(
    responses: list[KanoResponse], stakeholders: list[Stakeholder]
) -> tuple[dict[int, tuple[float, float]], dict[int, FeatureKanoProfile]]:
    """Full continuous-Kano pipeline: normalize, score, aggregate per feature."""
    weight_of = {s.id: s.weight for s in stakeholders}
    by_feature: dict[int, list[KanoScore]] = {}
    for raw in responses:
        if raw.stakeholder_id not in weight_of:
            raise ArpError("MISSING_RESPONSE", f"response from unknown stakeholder {raw.stakeholder_id}")
        if weight_of[raw.stakeholder_id] == 0:
            continue
        by_feature.setdefault(raw.feature_id, []).append(kano_scores(normalize_kano(raw)))
    profiles = {fid: aggregate_kano(scores, stakeholders) for fid, scores in sorted(by_feature.items())}
    values = {fid: (p.s, p.ds) for fid, p in profiles.items()}
    return values, profiles
