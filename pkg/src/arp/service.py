"""HTTP API over the planning pipeline.

Every response body is produced by the same payload builders the CLI uses, so
service and CLI outputs are byte-identical on the same inputs. Datasets live
in an in-memory store behind a lock; handles are immutable and re-uploading
yields a fresh id. An optional spool directory receives a write-through copy
of every uploaded dataset.
"""

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .baselines import HEURISTICS, classify_vs_reference, random_baseline, run_heuristic
from .dataio import (
    Dataset,
    build_instance,
    classification_payload,
    export_results,
    feature_values,
    feature_values_payload,
    parse_dataset,
    with_weight_overrides,
)
from .errors import ArpError
from .model import ParetoResult
from .solver import solve_scalarized
from .sweep import SweepConfig, sdo_sweep

DEFAULT_WHATIF_ALPHA = 0.5


@dataclass
class DatasetHandle:
    id: str
    dataset: Dataset
    features_payload: dict
    latest_solve: ParetoResult | None = field(default=None)


class _Store:
    def __init__(self):
        self._lock = threading.Lock()
        self._handles: dict[str, DatasetHandle] = {}

    def add(self, handle: DatasetHandle) -> None:
        with self._lock:
            self._handles[handle.id] = handle

    def get(self, dataset_id: str) -> DatasetHandle | None:
        with self._lock:
            return self._handles.get(dataset_id)

    def set_latest(self, dataset_id: str, result: ParetoResult) -> None:
        with self._lock:
            self._handles[dataset_id].latest_solve = result


def _json_response(data: bytes, status_code: int = 200) -> Response:
    return Response(content=data, status_code=status_code, media_type="application/json")


def _error(status_code: int, message: str, details=None) -> JSONResponse:
    body = {"detail": message}
    if details:
        body["errors"] = details
    return JSONResponse(status_code=status_code, content=body)


def _resolve_instance(handle: DatasetHandle, capacities, sat_discounts, dissat_discounts):
    return build_instance(
        handle.dataset,
        capacities=capacities,
        sat_discounts=sat_discounts,
        dissat_discounts=dissat_discounts,
    )


def create_app(spool_dir: str | None = None, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="arp service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = _Store()
    spool = Path(spool_dir) if spool_dir else None
    if spool:
        spool.mkdir(parents=True, exist_ok=True)

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/datasets", status_code=201)
    async def upload_dataset(request: Request):
        try:
            raw = await request.body()
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            return _error(422, f"invalid JSON: {exc.msg}")
        try:
            dataset = parse_dataset(obj)
            features, profiles = feature_values(dataset)
        except ArpError as exc:
            return _error(422, exc.message, exc.details)
        handle = DatasetHandle(
            id=uuid.uuid4().hex,
            dataset=dataset,
            features_payload=feature_values_payload(features, profiles),
        )
        store.add(handle)
        if spool:
            (spool / f"{handle.id}.json").write_bytes(raw)
        return {"id": handle.id}

    @app.get("/api/datasets/{dataset_id}/features")
    def features(dataset_id: str):
        handle = store.get(dataset_id)
        if handle is None:
            return _error(404, f"unknown dataset {dataset_id}")
        return _json_response(export_results(handle.features_payload, "json"))

    @app.post("/api/datasets/{dataset_id}/solve")
    async def solve(dataset_id: str, request: Request):
        handle = store.get(dataset_id)
        if handle is None:
            return _error(404, f"unknown dataset {dataset_id}")
        try:
            body = await request.json() if await request.body() else {}
        except json.JSONDecodeError as exc:
            return _error(422, f"invalid JSON: {exc.msg}")
        try:
            instance = _resolve_instance(
                handle,
                body.get("capacities"),
                body.get("sat_discounts"),
                body.get("dissat_discounts"),
            )
            step = float(body.get("step", SweepConfig().step))
            result = sdo_sweep(instance, SweepConfig(step=step))
        except ArpError as exc:
            return _error(422, exc.message, exc.details)
        store.set_latest(dataset_id, result)
        return _json_response(export_results(result, "json"))

    @app.post("/api/datasets/{dataset_id}/whatif")
    async def whatif(dataset_id: str, request: Request):
        handle = store.get(dataset_id)
        if handle is None:
            return _error(404, f"unknown dataset {dataset_id}")
        try:
            body = await request.json() if await request.body() else {}
        except json.JSONDecodeError as exc:
            return _error(422, f"invalid JSON: {exc.msg}")
        overrides_raw = body.get("stakeholder_weight_overrides") or {}
        dataset = handle.dataset
        if overrides_raw:
            if dataset.mode == "precomputed":
                return _error(409, "dataset carries precomputed values; there are no responses to re-weight")
            try:
                overrides = {int(k): int(v) for k, v in overrides_raw.items()}
                dataset = with_weight_overrides(dataset, overrides)
            except (ArpError, TypeError, ValueError) as exc:
                message = exc.message if isinstance(exc, ArpError) else str(exc)
                return _error(422, message)
        try:
            instance = build_instance(
                dataset,
                capacities=body.get("capacities"),
                sat_discounts=body.get("sat_discounts"),
                dissat_discounts=body.get("dissat_discounts"),
            )
            alpha = float(body.get("alpha", DEFAULT_WHATIF_ALPHA))
            report = solve_scalarized(instance, alpha)
        except ArpError as exc:
            return _error(422, exc.message, exc.details)
        return _json_response(export_results(report, "json"))

    @app.post("/api/datasets/{dataset_id}/baselines")
    async def baselines(dataset_id: str, request: Request):
        handle = store.get(dataset_id)
        if handle is None:
            return _error(404, f"unknown dataset {dataset_id}")
        try:
            body = await request.json() if await request.body() else {}
        except json.JSONDecodeError as exc:
            return _error(422, f"invalid JSON: {exc.msg}")
        reference = handle.latest_solve
        if reference is None:
            return _error(409, "no solve has been run for this dataset yet; call /solve first")
        wanted = body.get("heuristics") or sorted(HEURISTICS)
        unknown = [h for h in wanted if h not in HEURISTICS]
        if unknown:
            return _error(422, f"unknown heuristic id(s) {unknown}")
        try:
            instance = _resolve_instance(handle, body.get("capacities"), None, None)
            plans = [run_heuristic(instance, HEURISTICS[h]) for h in wanted]
            classification = classify_vs_reference(plans, reference)
            payload = {
                "type": "baselines",
                "classification": classification_payload(classification, list(wanted)),
            }
            reps = int(body.get("random_reps", 0))
            if reps > 0:
                report = random_baseline(instance, reps, int(body.get("seed", 1729)), reference)
                payload["random"] = json.loads(export_results(report, "json"))
            else:
                payload["random"] = None
        except ArpError as exc:
            return _error(422, exc.message, exc.details)
        return _json_response(export_results(payload, "json"))

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
