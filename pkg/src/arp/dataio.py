"""Dataset ingestion and result serialization.

JSON is the canonical dataset format; a CSV bundle (a directory holding
features.csv, stakeholders.csv, and one of onepoint.csv / kano.csv) covers
spreadsheet-origin survey data. A dataset carries exactly one valuation
block: precomputed (sat, dissat) pairs, one-point responses, Kano responses,
or AHP matrices. Three-point effort estimates are collapsed to their PERT
mean at load time.

Exports are deterministic and round-trippable: floats are quantized to six
significant digits on the way out, so export -> load -> export is
byte-stable and loading reproduces the exported values exactly.
"""

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .baselines import Classification
from .errors import ArpError
from .model import Feature, ParetoResult, Plan, ReleaseConfig, Stakeholder
from .planning import ArpInstance
from .solver import SolveReport
from .valuation import (
    AhpMatrix,
    FeatureKanoProfile,
    KanoResponse,
    OnePointResponse,
    Perspective,
    ahp_values,
    kano_values,
    one_point_values,
    pert_effort,
)

VALUATION_MODES = ("precomputed", "one_point", "kano", "ahp")


@dataclass(frozen=True, slots=True)
class FeatureRecord:
    """A feature before valuation: identity and (collapsed) effort only."""

    id: int
    name: str
    effort: float


@dataclass(frozen=True, slots=True)
class Dataset:
    """Validated, immutable planning input."""

    features: tuple[FeatureRecord, ...]
    stakeholders: tuple[Stakeholder, ...]
    mode: str
    precomputed: tuple[tuple[int, float, float], ...] | None = None
    one_point: tuple[OnePointResponse, ...] | None = None
    kano: tuple[KanoResponse, ...] | None = None
    ahp: tuple[AhpMatrix, ...] | None = None
    config: ReleaseConfig | None = None

    @property
    def n_features(self) -> int:
        return len(self.features)


# ---------------------------------------------------------------------------
# Dataset parsing


def _collapse_effort(raw, where: str, errors: list[str]) -> float:
    if isinstance(raw, dict):
        try:
            return pert_effort(
                float(raw.get("optimistic", 0.0)),
                float(raw.get("most_likely", 0.0)),
                float(raw.get("pessimistic", 0.0)),
            )
        except (ArpError, TypeError, ValueError) as exc:
            errors.append(f"{where}: bad effort triple ({exc})")
            return 0.0
    try:
        value = float(raw)
    except (TypeError, ValueError):
        errors.append(f"{where}: effort is not a number")
        return 0.0
    if value < 0:
        errors.append(f"{where}: effort must be >= 0")
        return 0.0
    return value


def parse_dataset(obj: dict) -> Dataset:
    """Build and validate a Dataset from decoded JSON.

    Validation is exhaustive: all independent violations are collected and
    reported together in a single VALIDATION_ERROR.
    """
    errors: list[str] = []
    if not isinstance(obj, dict):
        raise ArpError("VALIDATION_ERROR", "dataset must be a JSON object", ["dataset must be a JSON object"])

    features: list[FeatureRecord] = []
    seen_ids: set[int] = set()
    for idx, raw in enumerate(obj.get("features", [])):
        where = f"features[{idx}]"
        if not isinstance(raw, dict) or "id" not in raw:
            errors.append(f"{where}: missing id")
            continue
        fid = raw["id"]
        if not isinstance(fid, int):
            errors.append(f"{where}: id must be an integer")
            continue
        if fid in seen_ids:
            errors.append(f"{where}: duplicate feature id {fid}")
            continue
        seen_ids.add(fid)
        effort = _collapse_effort(raw.get("effort", 0.0), where, errors)
        features.append(FeatureRecord(id=fid, name=str(raw.get("name", f"F{fid}")), effort=effort))
    if not features:
        errors.append("dataset has no features")

    stakeholders: list[Stakeholder] = []
    seen_sids: set[int] = set()
    for idx, raw in enumerate(obj.get("stakeholders", [])):
        where = f"stakeholders[{idx}]"
        try:
            s = Stakeholder(id=int(raw["id"]), weight=raw["weight"])
        except (ArpError, KeyError, TypeError, ValueError) as exc:
            errors.append(f"{where}: {exc}")
            continue
        if s.id in seen_sids:
            errors.append(f"{where}: duplicate stakeholder id {s.id}")
            continue
        seen_sids.add(s.id)
        stakeholders.append(s)

    values = obj.get("values", {})
    present = [m for m in VALUATION_MODES if m in values]
    if len(present) != 1:
        errors.append(f"dataset must carry exactly one valuation block out of {VALUATION_MODES}, found {present}")
        mode = present[0] if present else "precomputed"
    else:
        mode = present[0]

    precomputed = one_point = kano = ahp = None
    feature_ids = {f.id for f in features}
    active_sids = sorted(s.id for s in stakeholders if s.weight > 0)

    if mode == "precomputed" and "precomputed" in values:
        rows = {}
        for idx, raw in enumerate(values["precomputed"]):
            where = f"values.precomputed[{idx}]"
            try:
                fid = int(raw["feature_id"])
                pair = (float(raw["sat"]), float(raw["dissat"]))
            except (KeyError, TypeError, ValueError):
                errors.append(f"{where}: needs feature_id, sat, dissat")
                continue
            if pair[0] < 0 or pair[1] < 0:
                errors.append(f"{where}: values must be >= 0")
                continue
            if fid in rows:
                errors.append(f"{where}: duplicate value row for feature {fid}")
                continue
            rows[fid] = pair
        for fid in sorted(feature_ids - set(rows)):
            errors.append(f"feature {fid}: no precomputed value")
        for fid in sorted(set(rows) - feature_ids):
            errors.append(f"values.precomputed: unknown feature id {fid}")
        precomputed = tuple((fid, s, ds) for fid, (s, ds) in sorted(rows.items()))

    elif mode == "one_point" and "one_point" in values:
        parsed = []
        covered: set[tuple[int, int]] = set()
        for idx, raw in enumerate(values["one_point"]):
            where = f"values.one_point[{idx}]"
            try:
                r = OnePointResponse(
                    feature_id=int(raw["feature_id"]),
                    stakeholder_id=int(raw["stakeholder_id"]),
                    sat=raw["sat"],
                    dissat=raw["dissat"],
                )
            except (ArpError, KeyError, TypeError, ValueError) as exc:
                errors.append(f"{where}: {exc}")
                continue
            if r.feature_id not in feature_ids:
                errors.append(f"{where}: unknown feature id {r.feature_id}")
                continue
            key = (r.feature_id, r.stakeholder_id)
            if key in covered:
                errors.append(f"{where}: duplicate response for feature {r.feature_id}, stakeholder {r.stakeholder_id}")
                continue
            covered.add(key)
            parsed.append(r)
        for fid in sorted(feature_ids):
            for sid in active_sids:
                if (fid, sid) not in covered:
                    errors.append(f"missing one_point response for feature {fid}, stakeholder {sid}")
        one_point = tuple(parsed)

    elif mode == "kano" and "kano" in values:
        parsed = []
        covered = set()
        for idx, raw in enumerate(values["kano"]):
            where = f"values.kano[{idx}]"
            try:
                r = KanoResponse(
                    feature_id=int(raw["feature_id"]),
                    stakeholder_id=int(raw["stakeholder_id"]),
                    functional=tuple(raw["functional"]),
                    dysfunctional=tuple(raw["dysfunctional"]),
                )
            except (ArpError, KeyError, TypeError, ValueError) as exc:
                errors.append(f"{where}: {exc}")
                continue
            if r.feature_id not in feature_ids:
                errors.append(f"{where}: unknown feature id {r.feature_id}")
                continue
            key = (r.feature_id, r.stakeholder_id)
            if key in covered:
                errors.append(f"{where}: duplicate response for feature {r.feature_id}, stakeholder {r.stakeholder_id}")
                continue
            covered.add(key)
            parsed.append(r)
        for fid in sorted(feature_ids):
            for sid in active_sids:
                if (fid, sid) not in covered:
                    errors.append(f"missing kano response for feature {fid}, stakeholder {sid}")
        kano = tuple(parsed)

    elif mode == "ahp" and "ahp" in values:
        parsed = []
        covered = set()
        for idx, raw in enumerate(values["ahp"]):
            where = f"values.ahp[{idx}]"
            try:
                m = AhpMatrix(
                    stakeholder_id=int(raw["stakeholder_id"]),
                    perspective=Perspective(raw["perspective"]),
                    entries=tuple(tuple(row) for row in raw["matrix"]),
                )
            except (ArpError, KeyError, TypeError, ValueError) as exc:
                errors.append(f"{where}: {exc}")
                continue
            if m.size != len(features):
                errors.append(f"{where}: matrix size {m.size} != {len(features)} features")
                continue
            key = (m.stakeholder_id, m.perspective)
            if key in covered:
                errors.append(f"{where}: duplicate {m.perspective.value} matrix for stakeholder {m.stakeholder_id}")
                continue
            covered.add(key)
            parsed.append(m)
        for sid in active_sids:
            for persp in (Perspective.SAT, Perspective.DISSAT):
                if (sid, persp) not in covered:
                    errors.append(f"missing {persp.value} comparison matrix for stakeholder {sid}")
        ahp = tuple(parsed)

    if mode != "precomputed" and not active_sids:
        errors.append("no stakeholder with positive weight")

    config = None
    if "config" in obj and obj["config"] is not None:
        raw = obj["config"]
        try:
            config = ReleaseConfig(
                k_releases=int(raw["releases"]),
                capacities=tuple(raw["capacities"]),
                sat_discounts=tuple(raw["sat_discounts"]) if raw.get("sat_discounts") else None,
                dissat_discounts=tuple(raw["dissat_discounts"]) if raw.get("dissat_discounts") else None,
            )
        except (ArpError, KeyError, TypeError, ValueError) as exc:
            errors.append(f"config: {exc}")

    if errors:
        raise ArpError("VALIDATION_ERROR", f"{len(errors)} problem(s) in dataset", errors)
    return Dataset(
        features=tuple(features),
        stakeholders=tuple(stakeholders),
        mode=mode,
        precomputed=precomputed,
        one_point=one_point,
        kano=kano,
        ahp=ahp,
        config=config,
    )


def _read_csv(path: Path) -> list[dict]:
    try:
        with path.open(newline="") as fh:
            return list(csv.DictReader(fh))
    except csv.Error as exc:
        raise ArpError("PARSE_ERROR", f"{path.name}: {exc}") from exc


def _load_csv_bundle(root: Path) -> dict:
    """Assemble the canonical JSON object from a CSV bundle directory."""
    features_file = root / "features.csv"
    if not features_file.exists():
        raise ArpError("PARSE_ERROR", f"{root}: CSV bundle needs features.csv")
    obj: dict = {"features": [], "stakeholders": []}
    has_precomputed = False
    for line_no, row in enumerate(_read_csv(features_file), start=2):
        feature: dict = {"id": _csv_int(row, "id", "features.csv", line_no)}
        if row.get("name"):
            feature["name"] = row["name"]
        if row.get("optimistic") or row.get("most_likely") or row.get("pessimistic"):
            feature["effort"] = {
                "optimistic": _csv_float(row, "optimistic", "features.csv", line_no),
                "most_likely": _csv_float(row, "most_likely", "features.csv", line_no),
                "pessimistic": _csv_float(row, "pessimistic", "features.csv", line_no),
            }
        else:
            feature["effort"] = _csv_float(row, "effort", "features.csv", line_no)
        obj["features"].append(feature)
        if row.get("sat") not in (None, "") and row.get("dissat") not in (None, ""):
            has_precomputed = True
            obj.setdefault("values", {}).setdefault("precomputed", []).append({
                "feature_id": feature["id"],
                "sat": _csv_float(row, "sat", "features.csv", line_no),
                "dissat": _csv_float(row, "dissat", "features.csv", line_no),
            })

    stakeholders_file = root / "stakeholders.csv"
    if stakeholders_file.exists():
        for line_no, row in enumerate(_read_csv(stakeholders_file), start=2):
            obj["stakeholders"].append({
                "id": _csv_int(row, "id", "stakeholders.csv", line_no),
                "weight": _csv_int(row, "weight", "stakeholders.csv", line_no),
            })

    onepoint_file = root / "onepoint.csv"
    kano_file = root / "kano.csv"
    if onepoint_file.exists():
        rows = []
        for line_no, row in enumerate(_read_csv(onepoint_file), start=2):
            rows.append({
                "feature_id": _csv_int(row, "feature_id", "onepoint.csv", line_no),
                "stakeholder_id": _csv_int(row, "stakeholder_id", "onepoint.csv", line_no),
                "sat": _csv_int(row, "sat", "onepoint.csv", line_no),
                "dissat": _csv_int(row, "dissat", "onepoint.csv", line_no),
            })
        obj["values"] = {"one_point": rows}
    elif kano_file.exists():
        # Ten allocation columns mirror the questionnaire's ten blanks.
        u_cols = ["u_like", "u_must_be", "u_neutral", "u_live_with", "u_dislike"]
        d_cols = ["d_like", "d_must_be", "d_neutral", "d_live_with", "d_dislike"]
        rows = []
        for line_no, row in enumerate(_read_csv(kano_file), start=2):
            rows.append({
                "feature_id": _csv_int(row, "feature_id", "kano.csv", line_no),
                "stakeholder_id": _csv_int(row, "stakeholder_id", "kano.csv", line_no),
                "functional": [_csv_float(row, c, "kano.csv", line_no) for c in u_cols],
                "dysfunctional": [_csv_float(row, c, "kano.csv", line_no) for c in d_cols],
            })
        obj["values"] = {"kano": rows}
    elif not has_precomputed:
        raise ArpError("PARSE_ERROR", f"{root}: bundle has neither a responses file nor sat/dissat feature columns")

    config_file = root / "config.json"
    if config_file.exists():
        obj["config"] = json.loads(config_file.read_text())
    return obj


def _csv_int(row: dict, key: str, filename: str, line_no: int) -> int:
    try:
        return int(row[key])
    except (KeyError, TypeError, ValueError):
        raise ArpError("PARSE_ERROR", f"{filename} line {line_no}: field '{key}' must be an integer") from None


def _csv_float(row: dict, key: str, filename: str, line_no: int) -> float:
    try:
        return float(row[key])
    except (KeyError, TypeError, ValueError):
        raise ArpError("PARSE_ERROR", f"{filename} line {line_no}: field '{key}' must be a number") from None


def load_dataset(path: str | Path, format: str | None = None) -> Dataset:
    """Load a dataset from a JSON file or a CSV bundle directory."""
    path = Path(path)
    if format is None:
        format = "csv" if path.is_dir() else "json"
    if format == "csv":
        return parse_dataset(_load_csv_bundle(path))
    try:
        obj = json.loads(path.read_text())
    except FileNotFoundError:
        raise ArpError("PARSE_ERROR", f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise ArpError("PARSE_ERROR", f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_dataset(obj)


def load_rankings_csv(path: str | Path):
    """Read a ranking table: columns rater, label, then one column per plan."""
    from .analysis import RankingTable

    path = Path(path)
    rows = _read_csv(path)
    if not rows:
        raise ArpError("PARSE_ERROR", f"{path.name}: empty ranking table")
    subjects = [c for c in rows[0].keys() if c not in ("rater", "label")]
    raters = []
    ranks = []
    for line_no, row in enumerate(rows, start=2):
        raters.append((_csv_int(row, "rater", path.name, line_no), row.get("label") or str(row["rater"])))
        ranks.append(tuple(_csv_int(row, c, path.name, line_no) for c in subjects))
    return RankingTable(raters=tuple(raters), subjects=tuple(subjects), ranks=tuple(ranks))


# ---------------------------------------------------------------------------
# Valuation pipeline over a dataset


def with_weight_overrides(dataset: Dataset, overrides: dict[int, int]) -> Dataset:
    """New dataset with some stakeholder weights replaced.

    Meaningless for precomputed datasets: there are no raw responses left to
    re-aggregate.
    """
    if dataset.mode == "precomputed":
        raise ArpError("PRECOMPUTED_DATASET", "cannot re-weight a dataset with precomputed values")
    known = {s.id for s in dataset.stakeholders}
    unknown = sorted(set(overrides) - known)
    if unknown:
        raise ArpError("VALIDATION_ERROR", f"unknown stakeholder id(s) {unknown}", [f"unknown stakeholder id {u}" for u in unknown])
    replaced = tuple(
        Stakeholder(id=s.id, weight=overrides.get(s.id, s.weight)) for s in dataset.stakeholders
    )
    return Dataset(
        features=dataset.features,
        stakeholders=replaced,
        mode=dataset.mode,
        precomputed=dataset.precomputed,
        one_point=dataset.one_point,
        kano=dataset.kano,
        ahp=dataset.ahp,
        config=dataset.config,
    )


def feature_values(dataset: Dataset) -> tuple[list[Feature], dict[int, FeatureKanoProfile] | None]:
    """Run the dataset's valuation route and return fully valued Features.

    The Kano route also returns per-feature attribute profiles; the other
    routes return None for profiles.
    """
    stakeholders = list(dataset.stakeholders)
    profiles = None
    if dataset.mode == "precomputed":
        values = {fid: (s, ds) for fid, s, ds in dataset.precomputed}
    elif dataset.mode == "one_point":
        values = one_point_values(list(dataset.one_point), stakeholders)
    elif dataset.mode == "kano":
        values, profiles = kano_values(list(dataset.kano), stakeholders)
    else:
        pairs, _ = ahp_values(list(dataset.ahp), stakeholders)
        values = {f.id: pair for f, pair in zip(dataset.features, pairs)}
    features = [
        Feature(id=f.id, name=f.name, effort=f.effort, sat_value=values[f.id][0], dissat_value=values[f.id][1])
        for f in dataset.features
    ]
    return features, profiles


def build_instance(
    dataset: Dataset,
    capacities: list[float] | None = None,
    sat_discounts: list[float] | None = None,
    dissat_discounts: list[float] | None = None,
) -> ArpInstance:
    """Assemble a solvable instance; explicit arguments override the dataset config."""
    features, _ = feature_values(dataset)
    if capacities is not None:
        config = ReleaseConfig(
            k_releases=len(capacities),
            capacities=tuple(capacities),
            sat_discounts=tuple(sat_discounts) if sat_discounts else None,
            dissat_discounts=tuple(dissat_discounts) if dissat_discounts else None,
        )
    elif dataset.config is not None:
        config = dataset.config
    else:
        raise ArpError("VALIDATION_ERROR", "no capacities given and the dataset embeds no config",
                       ["no capacities given and the dataset embeds no config"])
    return ArpInstance(features=tuple(features), config=config)


# ---------------------------------------------------------------------------
# Result export / import


def _q(x: float) -> float:
    """Quantize to six significant digits; canonical form for all exported decimals."""
    return float(f"{float(x):.6g}")


def plan_payload(plan: Plan, plan_id: int, stability=None) -> dict:
    payload = {
        "id": plan_id,
        "assignment": list(plan.assignment),
        "feature_ids": list(plan.feature_ids),
        "features": sorted(plan.offered()),
        "total_satisfaction": _q(plan.total_satisfaction),
        "total_dissatisfaction": _q(plan.total_dissatisfaction),
        "effort_used": [_q(e) for e in plan.effort_used],
    }
    if stability is not None:
        payload["stability"] = [[_q(lo), _q(hi)] for lo, hi in stability]
    return payload


def _plan_from_payload(payload: dict) -> Plan:
    return Plan(
        assignment=tuple(payload["assignment"]),
        feature_ids=tuple(payload["feature_ids"]),
        total_satisfaction=payload["total_satisfaction"],
        total_dissatisfaction=payload["total_dissatisfaction"],
        effort_used=tuple(payload["effort_used"]),
    )


def pareto_payload(result: ParetoResult) -> dict:
    return {
        "type": "pareto_result",
        "plans": [
            plan_payload(plan, idx + 1, stability)
            for idx, (plan, stability) in enumerate(zip(result.plans, result.stability))
        ],
        "alpha_grid": [_q(a) for a in result.alpha_grid],
    }


def solve_report_payload(report: SolveReport) -> dict:
    return {
        "type": "solve_report",
        "alpha": _q(report.alpha),
        "objective": _q(report.objective),
        "nodes_explored": report.nodes_explored,
        "proven_optimal": report.proven_optimal,
        "plan": plan_payload(report.plan, 1),
    }


def classification_payload(classification: Classification, heuristic_ids: list[str] | None = None) -> dict:
    ids = heuristic_ids or [f"plan{idx + 1}" for idx in range(len(classification.plans))]
    return {
        "type": "classification",
        "dominated": classification.dominated,
        "identical": classification.identical,
        "new_pareto": classification.new_pareto,
        "plans": [
            {"heuristic": hid, "label": label.value, **plan_payload(plan, idx + 1)}
            for idx, (hid, label, plan) in enumerate(zip(ids, classification.labels, classification.plans))
        ],
    }


def feature_values_payload(features: list[Feature], profiles: dict[int, FeatureKanoProfile] | None = None) -> dict:
    rows = []
    for f in features:
        row = {
            "id": f.id,
            "name": f.name,
            "effort": _q(f.effort),
            "sat": _q(f.sat_value),
            "dissat": _q(f.dissat_value),
        }
        if profiles and f.id in profiles:
            p = profiles[f.id]
            row["kano"] = {
                "a": _q(p.f_a), "o": _q(p.f_o), "m": _q(p.f_m),
                "i": _q(p.f_i), "r": _q(p.f_r), "q": _q(p.f_q),
            }
        else:
            row["kano"] = None
        rows.append(row)
    return {"type": "feature_values", "features": rows}


def _to_payload(result) -> dict:
    from .baselines import RandomBaselineReport

    if isinstance(result, dict):
        return result
    if isinstance(result, ParetoResult):
        return pareto_payload(result)
    if isinstance(result, SolveReport):
        return solve_report_payload(result)
    if isinstance(result, Classification):
        return classification_payload(result)
    if isinstance(result, RandomBaselineReport):
        return {
            "type": "random_baseline",
            "replications": len(result.values),
            "dominated": result.dominated,
            "identical": result.identical,
            "undominated": result.undominated,
            "dominated_fraction": _q(result.dominated_fraction),
            "best_gap": {"satisfaction_pct": _q(result.best_gap[0]), "dissatisfaction_pct": _q(result.best_gap[1])},
            "values": [[_q(ts), _q(tds)] for ts, tds in result.values],
        }
    raise ArpError("IO_ERROR", f"cannot export object of type {type(result).__name__}")


def _csv_bytes(header: list[str], rows: list[list]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{_q(value):g}"
    return str(value)


def _payload_csv(payload: dict) -> bytes:
    kind = payload.get("type")
    if kind == "pareto_result":
        header = ["plan_id", "features", "ts", "tds", "effort", "stability_lo", "stability_hi"]
        rows = []
        for plan in payload["plans"]:
            features = " ".join(f"F{fid}" for fid in plan["features"])
            effort = ";".join(_fmt(e) for e in plan["effort_used"])
            for lo, hi in plan.get("stability", [[None, None]]):
                rows.append([
                    plan["id"], features,
                    _fmt(plan["total_satisfaction"]), _fmt(plan["total_dissatisfaction"]),
                    effort, _fmt(lo) if lo is not None else "", _fmt(hi) if hi is not None else "",
                ])
        return _csv_bytes(header, rows)
    if kind == "solve_report":
        plan = payload["plan"]
        header = ["alpha", "objective", "ts", "tds", "features", "nodes_explored", "proven_optimal"]
        row = [
            _fmt(payload["alpha"]), _fmt(payload["objective"]),
            _fmt(plan["total_satisfaction"]), _fmt(plan["total_dissatisfaction"]),
            " ".join(f"F{fid}" for fid in plan["features"]),
            payload["nodes_explored"], payload["proven_optimal"],
        ]
        return _csv_bytes(header, [row])
    if kind == "classification":
        header = ["heuristic", "label", "ts", "tds", "features"]
        rows = [
            [p["heuristic"], p["label"], _fmt(p["total_satisfaction"]), _fmt(p["total_dissatisfaction"]),
             " ".join(f"F{fid}" for fid in p["features"])]
            for p in payload["plans"]
        ]
        return _csv_bytes(header, rows)
    if kind == "feature_values":
        has_kano = any(row.get("kano") for row in payload["features"])
        header = ["feature_id", "name", "effort", "sat", "dissat"]
        if has_kano:
            header += ["a", "o", "m", "i", "r", "q"]
        rows = []
        for row in payload["features"]:
            out = [row["id"], row["name"], _fmt(row["effort"]), _fmt(row["sat"]), _fmt(row["dissat"])]
            if has_kano:
                kano = row.get("kano") or {}
                out += [_fmt(kano.get(k, "")) if kano else "" for k in ("a", "o", "m", "i", "r", "q")]
            rows.append(out)
        return _csv_bytes(header, rows)
    raise ArpError("IO_ERROR", f"no CSV writer for payload type {kind!r}")


def export_results(result, format: str = "json") -> bytes:
    """Serialize a result object deterministically to JSON or CSV bytes."""
    payload = _to_payload(result)
    if format == "json":
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if format == "csv":
        return _payload_csv(payload)
    raise ArpError("IO_ERROR", f"unknown export format {format!r}")


def load_results(data: bytes | str | Path):
    """Reconstruct an exported result from JSON bytes or a file path."""
    if isinstance(data, Path):
        data = data.read_bytes()
    if isinstance(data, str) and "{" not in data:
        data = Path(data).read_bytes()
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ArpError("PARSE_ERROR", f"result JSON: {exc.msg}") from exc
    kind = payload.get("type")
    if kind == "pareto_result":
        plans = tuple(_plan_from_payload(p) for p in payload["plans"])
        stability = tuple(
            tuple((lo, hi) for lo, hi in p.get("stability", [])) for p in payload["plans"]
        )
        return ParetoResult(plans=plans, stability=stability, alpha_grid=tuple(payload["alpha_grid"]))
    if kind == "solve_report":
        return SolveReport(
            plan=_plan_from_payload(payload["plan"]),
            objective=payload["objective"],
            nodes_explored=payload["nodes_explored"],
            alpha=payload["alpha"],
            proven_optimal=payload["proven_optimal"],
        )
    if kind == "classification":
        from .baselines import PlanLabel

        labels = tuple(PlanLabel(p["label"]) for p in payload["plans"])
        plans = tuple(_plan_from_payload(p) for p in payload["plans"])
        return Classification(
            dominated=payload["dominated"],
            identical=payload["identical"],
            new_pareto=payload["new_pareto"],
            labels=labels,
            plans=plans,
        )
    if kind == "feature_values":
        return payload
    raise ArpError("PARSE_ERROR", f"unknown result type {kind!r}")
