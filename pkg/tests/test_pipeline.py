import json

import pytest

from harborth import golden
from harborth.errors import StageDependencyMissing
from harborth.pipeline import (STAGE_OUTPUTS, Pipeline, _any_from_json,
                               _any_to_json)


class TestRecords:
    def test_every_record_matches_reference(self, pipeline):
        for stage, recs in pipeline.records.items():
            for r in recs:
                assert r.matches_reference, (stage, r.name)

    def test_all_stage_outputs_present(self, pipeline):
        for stage, names in STAGE_OUTPUTS.items():
            for name in names:
                assert name in pipeline.results, (stage, name)

    def test_minpolys_equal_reference_tables(self, pipeline):
        for key in golden.MINPOLY_KEYS:
            assert pipeline.results[key].to_json_dict() == \
                golden.minpoly(key).to_json_dict(), key

    def test_json_round_trip(self, pipeline):
        for recs in pipeline.records.values():
            for r in recs:
                blob = _any_to_json(r.poly)
                again = _any_to_json(_any_from_json(blob))
                assert blob == again, r.name
                # serialized form survives an actual JSON encode/decode
                assert json.loads(json.dumps(blob)) == blob


class TestAccounting:
    def test_eliminant_degree(self, pipeline):
        assert pipeline.accounting["full_degree"] == 156

    def test_factor_multiplicities(self, pipeline):
        factors = pipeline.accounting["factors"]
        assert factors["2T + sqrt(3)"] == 1
        assert factors["2T - sqrt(3)"] == 1
        assert factors["64T^4 - 24T^2 + 9"] == 6
        assert factors["parameter minimal polynomial"] == 1

    def test_cofactor_degree(self, pipeline):
        assert pipeline.accounting["cofactor_degree"] == 108


class TestCache:
    def test_cache_round_trip(self, pipeline):
        fresh = Pipeline(cache_dir=pipeline.cache_dir)
        recs = fresh.run_stage(5)
        by_name = {r.name: r for r in pipeline.records[5]}
        for r in recs:
            assert r.poly == by_name[r.name].poly
            assert r.matches_reference == by_name[r.name].matches_reference

    def test_missing_dependency(self, tmp_path):
        empty = Pipeline(cache_dir=tmp_path / "nothing")
        with pytest.raises(StageDependencyMissing):
            empty.run_stage(4)

    def test_bad_stage_number(self, pipeline):
        with pytest.raises(ValueError):
            pipeline.run_stage(8)


class TestCertification:
    def test_overall_pass(self, report):
        assert report.ok
        assert report.payload["all_checks_passed"] is True

    def test_solved_height(self, report):
        assert report.payload["solved_height"].startswith("0.120725337054926")

    def test_tables_cover_minpolys(self, report):
        tables = report.payload["tables"]
        for key in golden.MINPOLY_KEYS:
            assert tables[key]["matches_reference"], key
            assert "polynomial" in tables[key]

    def test_unit_distance_block(self, report):
        unit = report.payload["unit_distance"]
        assert len(unit) == 14
        for label, entry in unit.items():
            assert entry["verdict"] == "proved-zero", label

    def test_canonical_bytes_parse(self, report):
        blob = json.loads(report.canonical_bytes())
        assert blob["all_checks_passed"] is True
