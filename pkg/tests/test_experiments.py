"""Bound reports, ratio search, report files."""

import json
from fractions import Fraction

import pytest

from simvc import (
    CSV_COLUMNS,
    FamilySpec,
    enumerate_spaces,
    full_cube,
    is_forest,
    iter_reports,
    k_sparse,
    lift_space,
    make_space,
    random_space_stream,
    ratio_search,
    run_report,
    vc_naive,
    verify_theorem,
)


class TestVerifyTheorem:
    def test_k_sparse_example(self):
        report = verify_theorem(k_sparse(5, 2))
        assert (report.d, report.d_sim) == (2, 4)
        assert report.ratio == Fraction(2)
        assert report.lower_ok and report.upper_ok

    def test_full_cube_example(self):
        report = verify_theorem(full_cube(3))
        assert (report.d, report.d_sim) == (3, 2)
        assert report.ratio == Fraction(2, 3)
        assert report.lower_ok and report.upper_ok

    def test_singleton_space(self):
        report = verify_theorem(make_space(3, ["010"]))
        assert (report.d, report.d_sim) == (0, 0)
        assert report.ratio is None
        assert report.urner_value is None
        assert report.lower_ok and report.upper_ok

    def test_single_element_domain(self):
        report = verify_theorem(make_space(1, ["0", "1"]))
        assert (report.d, report.d_sim) == (1, 0)
        assert report.witness_sim == ()
        assert report.lower_ok and report.upper_ok

    def test_witnesses_are_sound(self):
        report = verify_theorem(k_sparse(5, 2))
        assert len(report.witness_base) == report.d
        assert len(report.witness_sim) == report.d_sim
        assert is_forest(report.witness_sim)

    def test_to_dict_round_trips_through_json(self):
        report = verify_theorem(full_cube(2), family_spec=FamilySpec("full_cube", 2))
        doc = json.loads(json.dumps(report.to_dict()))
        assert doc["family"] == {"family": "full_cube", "n": 2}
        assert doc["d"] == 2 and doc["d_sim"] == 1 and doc["ratio"] == "1/2"
        assert "wall_time_ms" in doc
        assert "wall_time_ms" not in report.to_dict(include_timing=False)


class TestRatioSearch:
    def test_exhaustive_n2(self):
        # by hand: no pair of pair-columns exists over n=2, so d_sim <= 1;
        # {00, 01} attains d = 1, d_sim = 1
        result = ratio_search(enumerate_spaces(2), budget=15)
        assert result.max_ratio == Fraction(1)
        assert result.spaces_examined == 15
        assert not result.conjecture_violated

    def test_exhaustive_n3(self):
        result = ratio_search(enumerate_spaces(3), budget=255)
        assert result.max_ratio == Fraction(2)
        assert result.spaces_examined == 255
        assert not result.conjecture_violated

    def test_full_cube_stream(self):
        result = ratio_search((full_cube(n) for n in range(2, 6)), budget=4)
        assert result.max_ratio == Fraction(4, 5)
        assert result.argmax_space == full_cube(5)

    def test_k_sparse_stream_reaches_two(self):
        stream = [full_cube(2), k_sparse(5, 2), full_cube(3)]
        result = ratio_search(iter(stream), budget=3)
        assert result.max_ratio == Fraction(2)
        assert result.argmax_space == k_sparse(5, 2)

    def test_budget_truncates(self):
        result = ratio_search(enumerate_spaces(3), budget=10)
        assert result.spaces_examined == 10

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            ratio_search(enumerate_spaces(2), budget=0)

    def test_jobs_do_not_change_result(self):
        stream = lambda: random_space_stream(5, 8, 40, 31337)
        serial = ratio_search(stream(), budget=40)
        parallel = ratio_search(stream(), budget=40, jobs=4)
        assert serial == parallel

    def test_oracle_recomputation_n3(self):
        # same maximum through the naive oracle on base and lifted spaces
        best = None
        for space in enumerate_spaces(3):
            d = vc_naive(space)
            if d < 1:
                continue
            d_sim = vc_naive(lift_space(space))
            ratio = Fraction(d_sim, d)
            if best is None or ratio > best:
                best = ratio
        assert best == ratio_search(enumerate_spaces(3), budget=255).max_ratio

    def test_result_dict_shape(self):
        doc = ratio_search(enumerate_spaces(2), budget=15).to_dict()
        assert set(doc) == {
            "max_ratio",
            "argmax_space",
            "spaces_examined",
            "conjecture_violated",
        }


class TestRunReport:
    def test_csv_columns_and_values(self, tmp_path):
        out = tmp_path / "report.csv"
        rows = run_report([FamilySpec("k_sparse", 5, k=2)], "csv", out)
        assert rows == 1
        header, row = out.read_text().strip().split("\n")
        assert header == ",".join(CSV_COLUMNS)
        fields = row.split(",")
        assert fields[: len(CSV_COLUMNS) - 1] == [
            "k_sparse",
            "5",
            "2",
            "",
            "",
            "2",
            "4",
            "2",
            "true",
            "true",
            "8.0",
        ]

    def test_empty_specs_give_header_only(self, tmp_path):
        out = tmp_path / "empty.csv"
        assert run_report([], "csv", out) == 0
        assert out.read_text() == ",".join(CSV_COLUMNS) + "\n"

    def test_two_cubes_jsonl(self, tmp_path):
        out = tmp_path / "cubes.jsonl"
        rows = run_report(
            [FamilySpec("full_cube", 2), FamilySpec("full_cube", 3)], "jsonl", out
        )
        assert rows == 2
        docs = [json.loads(line) for line in out.read_text().splitlines()]
        assert [d["d_sim"] for d in docs] == [1, 2]

    def test_exhaustive_spec_expands(self, tmp_path):
        out = tmp_path / "all2.jsonl"
        assert run_report([FamilySpec("exhaustive", 2)], "jsonl", out) == 15

    def test_timing_column_is_optional_and_rest_deterministic(self, tmp_path):
        specs = [FamilySpec("exhaustive", 2), FamilySpec("k_sparse", 4, k=1)]
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        run_report(specs, "csv", a, include_timing=False)
        run_report(specs, "csv", b, jobs=3, include_timing=False)
        assert a.read_bytes() == b.read_bytes()
        assert a.read_text().splitlines()[0] == ",".join(CSV_COLUMNS[:-1])

    def test_unknown_format_rejected(self, tmp_path):
        from simvc import InvalidSpecError

        with pytest.raises(InvalidSpecError):
            run_report([], "xml", tmp_path / "x")


class TestIterReports:
    def test_stream_order_preserved(self):
        pairs = [("file", full_cube(2)), ("file", k_sparse(3, 1))]
        rows = list(iter_reports(pairs))
        assert [(r.d, r.d_sim) for r in rows] == [(2, 1), (1, 2)]

    def test_parallel_matches_serial(self):
        pairs = [("file", s) for s in enumerate_spaces(3)]
        serial = [r.to_dict(include_timing=False) for r in iter_reports(iter(pairs))]
        parallel = [
            r.to_dict(include_timing=False) for r in iter_reports(iter(pairs), jobs=4)
        ]
        assert serial == parallel

    def test_every_witness_sim_is_forest(self):
        for n in (2, 3):
            for report in iter_reports(("file", s) for s in enumerate_spaces(n)):
                assert is_forest(report.witness_sim)
                assert report.lower_ok and report.upper_ok
