"""Command-line entry point.

Exit codes: 0 success, 1 validation/usage error, 2 runtime error. Results go
to --out or stdout; diagnostics go to stderr only.
"""

import argparse
import os
import sys
from pathlib import Path

from .analysis import compare_manual, core_features, fleiss_kappa, symmetric_difference
from .baselines import (
    HEURISTICS,
    Factor,
    classify_vs_reference,
    greedy_one_factor,
    greedy_two_factor,
    random_baseline,
    run_heuristic,
)
from .dataio import (
    build_instance,
    export_results,
    load_dataset,
    load_rankings_csv,
    load_results,
    feature_values,
    feature_values_payload,
)
from .errors import ArpError
from .solver import brute_force_pareto, brute_force_scalarized, solve_scalarized
from .sweep import SweepConfig, exact_breakpoints, sdo_sweep

DEFAULT_SEED = 1729
DEFAULT_STEP = 0.001


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_io_flags(p, needs_input=True):
    if needs_input:
        p.add_argument("--input", required=True, help="dataset JSON file or CSV bundle directory")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["json", "csv"], default=None)


def _add_config_flags(p):
    p.add_argument("--capacity", type=float, nargs="+", default=None,
                   help="per-release capacities; overrides the dataset config")
    p.add_argument("--sat-discounts", type=float, nargs="+", default=None)
    p.add_argument("--dissat-discounts", type=float, nargs="+", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arp", description="Asymmetric release planning toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    value = sub.add_parser("value", help="compute per-feature satisfaction/dissatisfaction values")
    value.add_argument("mode", choices=["onepoint", "ahp", "kano"])
    _add_io_flags(value)

    solve = sub.add_parser("solve", help="sweep the trade-off front")
    _add_io_flags(solve)
    _add_config_flags(solve)
    solve.add_argument("--step", type=float, default=DEFAULT_STEP)
    solve.add_argument("--threads", type=int, default=None)
    solve.add_argument("--breakpoints", action="store_true", help="append analytical breakpoints to stderr")

    solve_one = sub.add_parser("solve-one", help="solve a single scalarized problem")
    _add_io_flags(solve_one)
    _add_config_flags(solve_one)
    solve_one.add_argument("--alpha", type=float, required=True)

    baseline = sub.add_parser("baseline", help="run baseline search strategies")
    baseline_sub = baseline.add_subparsers(dest="strategy", required=True)
    b_random = baseline_sub.add_parser("random")
    _add_io_flags(b_random)
    _add_config_flags(b_random)
    b_random.add_argument("--reps", type=int, default=1000)
    b_random.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b_random.add_argument("--step", type=float, default=DEFAULT_STEP, help="grid step for the reference sweep")
    b_greedy = baseline_sub.add_parser("greedy")
    _add_io_flags(b_greedy)
    _add_config_flags(b_greedy)
    b_greedy.add_argument("--factor", choices=[f.value for f in Factor], required=True)
    b_greedy2 = baseline_sub.add_parser("greedy2")
    _add_io_flags(b_greedy2)
    _add_config_flags(b_greedy2)
    b_greedy2.add_argument("--factor-a", choices=[f.value for f in Factor], required=True)
    b_greedy2.add_argument("--factor-b", choices=[f.value for f in Factor], required=True)
    b_suite = baseline_sub.add_parser("heuristics", help="run H1..H8 and classify against a sweep")
    _add_io_flags(b_suite)
    _add_config_flags(b_suite)
    b_suite.add_argument("--step", type=float, default=DEFAULT_STEP)

    oracle = sub.add_parser("oracle", help="exhaustive-enumeration oracles (small instances)")
    oracle_sub = oracle.add_subparsers(dest="kind", required=True)
    o_scalar = oracle_sub.add_parser("scalarized")
    _add_io_flags(o_scalar)
    _add_config_flags(o_scalar)
    o_scalar.add_argument("--alpha", type=float, required=True)
    o_pareto = oracle_sub.add_parser("pareto")
    _add_io_flags(o_pareto)
    _add_config_flags(o_pareto)

    analyze = sub.add_parser("analyze", help="post-hoc plan analytics")
    analyze_sub = analyze.add_subparsers(dest="what", required=True)
    a_diff = analyze_sub.add_parser("diff")
    a_diff.add_argument("--plans", required=True, help="exported trade-off result (JSON)")
    a_diff.add_argument("--a", type=int, required=True, help="first plan id (1-based)")
    a_diff.add_argument("--b", type=int, required=True, help="second plan id (1-based)")
    a_diff.add_argument("--out", default=None)
    a_core = analyze_sub.add_parser("core")
    a_core.add_argument("--plans", required=True)
    a_core.add_argument("--out", default=None)
    a_kappa = analyze_sub.add_parser("kappa")
    a_kappa.add_argument("--rankings", required=True, help="ranking table CSV")
    a_kappa.add_argument("--out", default=None)
    a_compare = analyze_sub.add_parser("compare-manual")
    a_compare.add_argument("--manual", required=True, help="CSV with ts,tds columns or exported result JSON")
    a_compare.add_argument("--optimized", required=True)
    a_compare.add_argument("--out", default=None)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--spool", default=None, help="directory for write-through dataset copies")
    serve.add_argument("--ui", default=None, help="static directory with the explorer UI")

    return parser


def _write(data: bytes, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        try:
            Path(out).write_bytes(data)
        except OSError as exc:
            raise ArpError("IO_ERROR", f"cannot write {out}: {exc}") from exc


def _instance(args):
    dataset = load_dataset(args.input)
    return build_instance(
        dataset,
        capacities=args.capacity,
        sat_discounts=getattr(args, "sat_discounts", None),
        dissat_discounts=getattr(args, "dissat_discounts", None),
    )


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("ARP_THREADS")
    return int(env) if env else 1


def _load_values(path: str) -> list[tuple[float, float]]:
    """(TS, TDS) pairs from an exported result JSON or a ts/tds CSV."""
    import csv as _csv

    p = Path(path)
    if p.suffix.lower() == ".json":
        result = load_results(p)
        return [(plan.total_satisfaction, plan.total_dissatisfaction) for plan in result.plans]
    with p.open(newline="") as fh:
        rows = list(_csv.DictReader(fh))
    try:
        return [(float(r["ts"]), float(r["tds"])) for r in rows]
    except (KeyError, ValueError):
        raise ArpError("PARSE_ERROR", f"{p.name}: expected columns ts, tds") from None


def _json_bytes(obj: dict) -> bytes:
    import json

    return (json.dumps(obj, indent=2) + "\n").encode()


def _run(args) -> int:
    fmt = getattr(args, "format", None)

    if args.command == "value":
        dataset = load_dataset(args.input)
        expected = {"onepoint": "one_point", "ahp": "ahp", "kano": "kano"}[args.mode]
        if dataset.mode != expected:
            raise ArpError("VALIDATION_ERROR", f"dataset valuation mode is {dataset.mode}, expected {expected}",
                           [f"dataset valuation mode is {dataset.mode}, expected {expected}"])
        features, profiles = feature_values(dataset)
        _write(export_results(feature_values_payload(features, profiles), fmt or "csv"), args.out)
        return 0

    if args.command == "solve":
        instance = _instance(args)
        result = sdo_sweep(instance, SweepConfig(step=args.step), workers=_threads(args))
        _write(export_results(result, fmt or "csv"), args.out)
        if args.breakpoints and len(result.plans) >= 2:
            print("breakpoints:", " ".join(f"{b:.6g}" for b in exact_breakpoints(result)), file=sys.stderr)
        return 0

    if args.command == "solve-one":
        instance = _instance(args)
        report = solve_scalarized(instance, args.alpha)
        _write(export_results(report, fmt or "json"), args.out)
        return 0

    if args.command == "baseline":
        instance = _instance(args)
        if args.strategy == "random":
            reference = sdo_sweep(instance, SweepConfig(step=args.step))
            report = random_baseline(instance, args.reps, args.seed, reference)
            _write(export_results(report, fmt or "json"), args.out)
            return 0
        if args.strategy == "heuristics":
            reference = sdo_sweep(instance, SweepConfig(step=args.step))
            plans = [run_heuristic(instance, HEURISTICS[h]) for h in sorted(HEURISTICS)]
            classification = classify_vs_reference(plans, reference)
            from .dataio import classification_payload

            _write(export_results(classification_payload(classification, sorted(HEURISTICS)), fmt or "csv"), args.out)
            return 0
        if args.strategy == "greedy":
            plan = greedy_one_factor(instance, Factor(args.factor))
        else:
            plan = greedy_two_factor(instance, Factor(args.factor_a), Factor(args.factor_b))
        from .dataio import plan_payload

        _write(_json_bytes({"type": "plan", **plan_payload(plan, 1)}), args.out)
        return 0

    if args.command == "oracle":
        instance = _instance(args)
        if args.kind == "scalarized":
            best, argmax = brute_force_scalarized(instance, args.alpha)
            payload = {
                "type": "oracle_scalarized",
                "alpha": args.alpha,
                "objective": best,
                "argmax": sorted(list(a) for a in argmax),
            }
            _write(_json_bytes(payload), args.out)
        else:
            front = brute_force_pareto(instance)
            payload = {
                "type": "oracle_pareto",
                "front": [{"ts": ts, "tds": tds, "assignment": list(a)} for ts, tds, a in front],
            }
            _write(_json_bytes(payload), args.out)
        return 0

    if args.command == "analyze":
        if args.what == "diff":
            result = load_results(Path(args.plans))
            plans = {i + 1: p for i, p in enumerate(result.plans)}
            if args.a not in plans or args.b not in plans:
                raise ArpError("VALIDATION_ERROR", f"plan ids must be in 1..{len(plans)}",
                               [f"plan ids must be in 1..{len(plans)}"])
            diff = symmetric_difference(plans[args.a], plans[args.b])
            _write(_json_bytes({"type": "diff", "a": args.a, "b": args.b,
                                "symmetric_difference": sorted(diff)}), args.out)
            return 0
        if args.what == "core":
            result = load_results(Path(args.plans))
            core = core_features(list(result.plans))
            _write(_json_bytes({"type": "core", "core_features": sorted(core)}), args.out)
            return 0
        if args.what == "kappa":
            table = load_rankings_csv(args.rankings)
            kappa = fleiss_kappa(table)
            _write(_json_bytes({"type": "kappa", "raters": len(table.raters),
                                "subjects": len(table.subjects), "kappa": kappa}), args.out)
            return 0
        manual = _load_values(args.manual)
        optimized = _load_values(args.optimized)
        sat_pct, dissat_pct = compare_manual(manual, optimized)
        _write(_json_bytes({"type": "compare_manual", "satisfaction_improvement_pct": sat_pct,
                            "dissatisfaction_improvement_pct": dissat_pct}), args.out)
        return 0

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        app = create_app(spool_dir=args.spool, ui_dir=args.ui)
        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    raise ArpError("VALIDATION_ERROR", f"unknown command {args.command!r}", [])


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _run(args)
    except ArpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for detail in exc.details:
            print(f"  - {detail}", file=sys.stderr)
        return 2 if exc.code == "IO_ERROR" else 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"unexpected error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
