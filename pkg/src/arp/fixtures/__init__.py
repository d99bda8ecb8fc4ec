"""Bundled fixtures: the nine-feature walkthrough dataset, the continuous-Kano
worked example, and the case-study summary tables used by the acceptance suite.
"""

import json
from importlib import resources
from pathlib import Path

from ..model import Plan, Stakeholder
from ..valuation import KanoResponse, KanoScore


def _path(name: str) -> Path:
    return Path(str(resources.files(__package__) / name))


def motivating_path() -> Path:
    """Path of the bundled nine-feature dataset (precomputed values, Cap=3)."""
    return _path("motivating.json")


def rankings_path(perspective: str) -> Path:
    """Path of a bundled ranking table; perspective is 'satisfaction' or 'dissatisfaction'."""
    if perspective not in ("satisfaction", "dissatisfaction"):
        raise ValueError("perspective must be 'satisfaction' or 'dissatisfaction'")
    return _path(f"rankings_{perspective}.csv")


def kano_worked_example() -> dict:
    """The published single-feature Kano walkthrough.

    Returns a dict with:
      * ``scores``: per-stakeholder KanoScore objects (leftover mass from the
        published four-attribute rows is booked as Reverse),
      * ``stakeholders``: matching Stakeholder objects,
      * ``sample_response``: the one raw KanoResponse printed in the source,
      * ``reference``: the published aggregate values and their tolerance.
    """
    data = json.loads(_path("kano_worked_example.json").read_text())
    fid = data["feature_id"]
    scores = []
    stakeholders = []
    for row in data["scores"]:
        m, o, a, i = row["m"], row["o"], row["a"], row["i"]
        r = max(0.0, 1.0 - (m + o + a + i))
        scores.append(KanoScore(feature_id=fid, stakeholder_id=row["stakeholder_id"],
                                a=a, o=o, m=m, i=i, r=r, q=0.0))
        stakeholders.append(Stakeholder(id=row["stakeholder_id"], weight=row["weight"]))
    sample = data["sample_response"]
    sample_response = KanoResponse(
        feature_id=fid,
        stakeholder_id=sample["stakeholder_id"],
        functional=tuple(sample["functional"]),
        dysfunctional=tuple(sample["dysfunctional"]),
    )
    return {
        "feature_id": fid,
        "scores": scores,
        "stakeholders": stakeholders,
        "sample_response": sample_response,
        "sample_expected": sample["expected_scores"],
        "reference": data["reference"],
    }


def _plan_from_feature_set(features: list[int], n_features: int, sat: float, dissat: float, effort: float) -> Plan:
    offered = set(features)
    return Plan(
        assignment=tuple(1 if fid in offered else 2 for fid in range(1, n_features + 1)),
        feature_ids=tuple(range(1, n_features + 1)),
        total_satisfaction=sat,
        total_dissatisfaction=dissat,
        effort_used=(effort,),
    )


def case_study() -> dict:
    """Case-study summary data: four trade-off plans, six manual plans, and
    the published reference values (core features, pairwise diffs,
    improvement percentages) asserted by the acceptance suite.
    """
    data = json.loads(_path("case_study.json").read_text())
    n = data["n_features"]
    tradeoff = [
        _plan_from_feature_set(p["features"], n, p["satisfaction"], p["dissatisfaction"], p["effort"])
        for p in data["tradeoff_plans"]
    ]
    manual = [
        _plan_from_feature_set(p["features"], n, p["satisfaction"], p["dissatisfaction"], 0.0)
        for p in data["manual_plans"]
    ]
    return {
        "capacity": data["capacity"],
        "tradeoff_plans": tradeoff,
        "manual_plans": manual,
        "manual_ids": [p["id"] for p in data["manual_plans"]],
        "reference": data["reference"],
    }
