import json

import pytest

from arp import ArpError, Factor, classify_vs_reference, greedy_one_factor, sdo_sweep, solve_scalarized
from arp import fixtures as bundled
from arp.dataio import (
    build_instance,
    export_results,
    feature_values,
    feature_values_payload,
    load_dataset,
    load_rankings_csv,
    load_results,
    parse_dataset,
    with_weight_overrides,
)
from arp.sweep import SweepConfig


def motivating_obj():
    return json.loads(bundled.motivating_path().read_text())


class TestLoadDataset:
    def test_bundled_motivating(self):
        dataset = load_dataset(bundled.motivating_path())
        assert dataset.n_features == 9
        assert dataset.mode == "precomputed"
        assert dataset.config.k_releases == 1
        instance = build_instance(dataset)
        assert instance.features[0].sat_value == 9.0

    def test_pert_triples_collapse_at_load(self, tmp_path):
        obj = motivating_obj()
        obj["features"][0]["effort"] = {"optimistic": 1, "most_likely": 2, "pessimistic": 9}
        path = tmp_path / "ds.json"
        path.write_text(json.dumps(obj))
        dataset = load_dataset(path)
        assert dataset.features[0].effort == pytest.approx(3.0)

    def test_parse_error_names_location(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"features": [,]}')
        with pytest.raises(ArpError) as exc:
            load_dataset(path)
        assert exc.value.code == "PARSE_ERROR"
        assert "line" in exc.value.message

    def test_missing_file(self, tmp_path):
        with pytest.raises(ArpError) as exc:
            load_dataset(tmp_path / "absent.json")
        assert exc.value.code == "PARSE_ERROR"

    def test_duplicate_feature_id(self):
        obj = motivating_obj()
        obj["features"][1]["id"] = 1
        with pytest.raises(ArpError) as exc:
            parse_dataset(obj)
        assert exc.value.code == "VALIDATION_ERROR"
        assert any("duplicate feature id" in d for d in exc.value.details)

    def test_missing_kano_response_named(self):
        obj = {
            "features": [{"id": 1, "effort": 1}, {"id": 2, "effort": 1}],
            "stakeholders": [{"id": 1, "weight": 5}],
            "values": {"kano": [
                {"feature_id": 1, "stakeholder_id": 1,
                 "functional": [100, 0, 0, 0, 0], "dysfunctional": [0, 0, 0, 0, 100]},
            ]},
        }
        with pytest.raises(ArpError) as exc:
            parse_dataset(obj)
        assert any("feature 2, stakeholder 1" in d for d in exc.value.details)

    def test_validation_collects_all_defects(self):
        obj = motivating_obj()
        obj["features"][2]["effort"] = -4                    # defect 1: negative effort
        obj["stakeholders"].append({"id": 7, "weight": 99})  # defect 2: weight range
        del obj["values"]["precomputed"][0]                  # defect 3: uncovered feature
        obj["values"]["precomputed"].append(                 # defect 4: duplicate value row
            dict(obj["values"]["precomputed"][-1])
        )
        with pytest.raises(ArpError) as exc:
            parse_dataset(obj)
        assert len(exc.value.details) == 4

    def test_exactly_one_valuation_block(self):
        obj = motivating_obj()
        obj["values"]["one_point"] = []
        with pytest.raises(ArpError) as exc:
            parse_dataset(obj)
        assert any("exactly one valuation block" in d for d in exc.value.details)


class TestCsvBundle:
    def test_precomputed_bundle_matches_json(self, tmp_path):
        bundle = tmp_path / "bundle"
        bundle.mkdir()
        (bundle / "features.csv").write_text(
            "id,name,effort,sat,dissat\n"
            + "\n".join(
                f"{fid},{name},1,{sat},{dissat}"
                for fid, name, sat, dissat in [
                    (f["id"], f["name"], v["sat"], v["dissat"])
                    for f, v in zip(motivating_obj()["features"], motivating_obj()["values"]["precomputed"])
                ]
            )
            + "\n"
        )
        (bundle / "stakeholders.csv").write_text("id,weight\n1,1\n")
        (bundle / "config.json").write_text('{"releases": 1, "capacities": [3]}')
        dataset = load_dataset(bundle)
        json_dataset = load_dataset(bundled.motivating_path())
        assert feature_values(dataset)[0] == feature_values(json_dataset)[0]

    def test_kano_bundle(self, tmp_path):
        bundle = tmp_path / "bundle"
        bundle.mkdir()
        (bundle / "features.csv").write_text("id,name,effort\n1,F1,2\n")
        (bundle / "stakeholders.csv").write_text("id,weight\n1,5\n")
        (bundle / "kano.csv").write_text(
            "feature_id,stakeholder_id,u_like,u_must_be,u_neutral,u_live_with,u_dislike,"
            "d_like,d_must_be,d_neutral,d_live_with,d_dislike\n"
            "1,1,100,0,0,0,0,0,0,5,11,84\n"
        )
        dataset = load_dataset(bundle)
        features, profiles = feature_values(dataset)
        assert profiles[1].f_a == pytest.approx(0.16, abs=1e-12)
        assert profiles[1].f_o == pytest.approx(0.84, abs=1e-12)

    def test_missing_features_file(self, tmp_path):
        bundle = tmp_path / "bundle"
        bundle.mkdir()
        with pytest.raises(ArpError) as exc:
            load_dataset(bundle)
        assert exc.value.code == "PARSE_ERROR"

    def test_bad_field_names_line(self, tmp_path):
        bundle = tmp_path / "bundle"
        bundle.mkdir()
        (bundle / "features.csv").write_text("id,name,effort\n1,F1,abc\n")
        with pytest.raises(ArpError) as exc:
            load_dataset(bundle)
        assert "line 2" in exc.value.message

    def test_rankings_csv(self):
        table = load_rankings_csv(bundled.rankings_path("satisfaction"))
        assert len(table.raters) == 20
        assert len(table.subjects) == 4
        assert table.ranks[0] == (4, 1, 2, 3)


class TestWeightOverrides:
    def kano_dataset(self):
        return parse_dataset({
            "features": [{"id": 1, "effort": 1}],
            "stakeholders": [{"id": 1, "weight": 5}, {"id": 2, "weight": 5}],
            "values": {"kano": [
                {"feature_id": 1, "stakeholder_id": 1,
                 "functional": [100, 0, 0, 0, 0], "dysfunctional": [0, 0, 0, 0, 100]},
                {"feature_id": 1, "stakeholder_id": 2,
                 "functional": [0, 0, 100, 0, 0], "dysfunctional": [0, 0, 100, 0, 0]},
            ]},
        })

    def test_reweighting_changes_values(self):
        dataset = self.kano_dataset()
        base, _ = feature_values(dataset)
        silenced, _ = feature_values(with_weight_overrides(dataset, {2: 0}))
        assert silenced[0].sat_value != base[0].sat_value
        assert silenced[0].sat_value == pytest.approx(1.0)

    def test_precomputed_rejected(self):
        with pytest.raises(ArpError) as exc:
            with_weight_overrides(load_dataset(bundled.motivating_path()), {1: 0})
        assert exc.value.code == "PRECOMPUTED_DATASET"

    def test_unknown_stakeholder(self):
        with pytest.raises(ArpError) as exc:
            with_weight_overrides(self.kano_dataset(), {9: 1})
        assert exc.value.code == "VALIDATION_ERROR"


class TestExports:
    def sweep_result(self):
        instance = build_instance(load_dataset(bundled.motivating_path()))
        return sdo_sweep(instance)

    def test_pareto_csv_shape(self):
        data = export_results(self.sweep_result(), "csv").decode()
        lines = data.strip().split("\n")
        assert lines[0] == "plan_id,features,ts,tds,effort,stability_lo,stability_hi"
        assert len(lines) == 7  # header + six plans, one stability interval each
        assert lines[1].startswith("1,F7 F8 F9,6,25,3,")

    def test_empty_like_payload_header_only(self):
        payload = {"type": "pareto_result", "plans": [], "alpha_grid": []}
        data = export_results(payload, "csv").decode()
        assert data.strip() == "plan_id,features,ts,tds,effort,stability_lo,stability_hi"

    def test_pareto_json_round_trip(self):
        result = self.sweep_result()
        exported = export_results(result, "json")
        loaded = load_results(exported)
        assert [p.assignment for p in loaded.plans] == [p.assignment for p in result.plans]
        assert [p.values() for p in loaded.plans] == [p.values() for p in result.plans]
        assert export_results(loaded, "json") == exported  # canonical form is idempotent

    def test_solve_report_round_trip(self):
        instance = build_instance(load_dataset(bundled.motivating_path()))
        report = solve_scalarized(instance, 0.9)
        exported = export_results(report, "json")
        loaded = load_results(exported)
        assert loaded.plan.assignment == report.plan.assignment
        assert loaded.alpha == pytest.approx(0.9)
        assert export_results(loaded, "json") == exported

    def test_classification_round_trip(self):
        instance = build_instance(load_dataset(bundled.motivating_path()))
        reference = sdo_sweep(instance, SweepConfig(step=0.01))
        plan = greedy_one_factor(instance, Factor.SAT)
        classification = classify_vs_reference([plan], reference)
        exported = export_results(classification, "json")
        loaded = load_results(exported)
        assert loaded.labels == classification.labels
        assert export_results(loaded, "json") == exported

    def test_feature_values_round_trip_and_csv(self):
        dataset = load_dataset(bundled.motivating_path())
        features, profiles = feature_values(dataset)
        payload = feature_values_payload(features, profiles)
        exported = export_results(payload, "json")
        assert load_results(exported) == json.loads(exported)
        csv_data = export_results(payload, "csv").decode()
        assert csv_data.splitlines()[0] == "feature_id,name,effort,sat,dissat"
        assert len(csv_data.strip().splitlines()) == 10

    def test_six_significant_digits(self):
        payload = {"type": "solve_report", "alpha": 0.123456789, "objective": -1.23456789012,
                   "nodes_explored": 3, "proven_optimal": True,
                   "plan": {"id": 1, "assignment": [1], "feature_ids": [1], "features": [1],
                            "total_satisfaction": 1.0, "total_dissatisfaction": 0.0,
                            "effort_used": [1.0]}}
        from arp.solver import SolveReport
        loaded = load_results(export_results(load_results(export_results(payload, "json")), "json"))
        assert isinstance(loaded, SolveReport)
        assert loaded.alpha == 0.123457
        assert loaded.objective == -1.23457

    def test_deterministic_bytes(self):
        a = export_results(self.sweep_result(), "json")
        b = export_results(self.sweep_result(), "json")
        assert a == b

    def test_unknown_format(self):
        with pytest.raises(ArpError) as exc:
            export_results(self.sweep_result(), "xml")
        assert exc.value.code == "IO_ERROR"
