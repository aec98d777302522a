import csv
import dataclasses
import json
import math

import pytest

from primeproduct import __version__
from primeproduct.bench import (
    CSV_HEADER,
    BenchReport,
    IntegrityError,
    compare,
    sweep,
    to_csv,
    to_jsonl,
    write_report,
)
from primeproduct.formula import LITERAL, SHORT_CIRCUIT, primality_indicator


class TestSweep:
    def test_first_three_rows(self):
        report = sweep(2, 4, SHORT_CIRCUIT)
        assert [row.n for row in report.rows] == [2, 3, 4]
        assert [row.indicator for row in report.rows] == [1, 1, 0]

    def test_rows_strictly_increasing(self):
        report = sweep(2, 50)
        ns = [row.n for row in report.rows]
        assert ns == sorted(set(ns))

    def test_literal_term_total_matches_direct_sum(self):
        report = sweep(2, 100, LITERAL)
        expected = sum(max(0, math.isqrt(n) - 1) for n in range(2, 101))
        assert sum(row.terms for row in report.rows) == expected

    def test_short_circuit_finds_25_primes_below_100(self):
        report = sweep(2, 100, SHORT_CIRCUIT)
        assert sum(row.indicator for row in report.rows) == 25

    def test_stats_copied_verbatim(self):
        report = sweep(2, 60)
        for row in report.rows:
            value, stats = primality_indicator(row.n, SHORT_CIRCUIT)
            assert (row.indicator, row.divisions, row.terms) == (
                value,
                stats.divisions,
                stats.terms,
            )

    def test_prime_rows_pay_the_full_scan(self):
        for strategy in (LITERAL, SHORT_CIRCUIT):
            for row in sweep(2, 300, strategy).rows:
                if row.indicator == 1:
                    assert row.divisions == row.terms == math.isqrt(row.n) - 1

    def test_metadata(self):
        report = sweep(2, 4, LITERAL)
        assert report.strategy == LITERAL
        assert report.version == __version__
        assert report.timestamp  # informational, format not asserted

    @pytest.mark.parametrize("start,stop", [(0, 5), (1, 5), (5, 2)])
    def test_bad_ranges(self, start, stop):
        with pytest.raises(ValueError):
            sweep(start, stop)

    def test_row_cap(self):
        with pytest.raises(ValueError, match="row cap"):
            sweep(2, 20, row_cap=10)
        assert len(sweep(2, 11, row_cap=10).rows) == 10

    def test_bad_strategy(self):
        with pytest.raises(ValueError):
            sweep(2, 4, "eager")


class TestCompare:
    def test_identical_reports_ratio_one(self):
        report = sweep(2, 30)
        summary = compare(report, report)
        assert all(row.divisions_ratio == 1.0 for row in summary.rows)
        assert all(row.elapsed_ratio == 1.0 for row in summary.rows)
        assert summary.divisions_ratio == 1.0

    def test_literal_vs_short_circuit(self):
        literal = sweep(2, 100, LITERAL)
        short = sweep(2, 100, SHORT_CIRCUIT)
        summary = compare(literal, short)
        for a, b in zip(literal.rows, short.rows):
            assert b.divisions <= a.divisions
        assert all(row.divisions_ratio <= 1.0 for row in summary.rows)
        assert summary.divisions_b <= summary.divisions_a

    def test_range_mismatch(self):
        with pytest.raises(ValueError):
            compare(sweep(2, 10), sweep(2, 11))

    def test_indicator_mismatch_is_an_integrity_error(self):
        report = sweep(2, 10)
        tampered_rows = list(report.rows)
        tampered_rows[2] = dataclasses.replace(tampered_rows[2], indicator=1 - tampered_rows[2].indicator)
        tampered = BenchReport(tuple(tampered_rows), report.strategy, report.timestamp, report.version)
        with pytest.raises(IntegrityError, match="n=4"):
            compare(report, tampered)


class TestReportFormats:
    def test_csv_layout(self):
        report = sweep(2, 6)
        text = to_csv(report)
        lines = text.splitlines()
        assert lines[0] == f"# strategy={report.strategy}"
        assert lines[1] == f"# timestamp={report.timestamp}"
        assert lines[2] == f"# version={report.version}"
        assert lines[3] == CSV_HEADER
        data = list(csv.DictReader(line for line in lines[3:] if not line.startswith("#")))
        assert [row["n"] for row in data] == ["2", "3", "4", "5", "6"]
        assert [row["indicator"] for row in data] == ["1", "1", "0", "1", "0"]

    def test_jsonl_layout(self):
        report = sweep(2, 6)
        lines = to_jsonl(report).splitlines()
        meta = json.loads(lines[0])
        assert meta == {
            "strategy": report.strategy,
            "timestamp": report.timestamp,
            "version": report.version,
        }
        rows = [json.loads(line) for line in lines[1:]]
        assert [row["n"] for row in rows] == ["2", "3", "4", "5", "6"]
        assert all(
            set(row) == {"n", "indicator", "divisions", "terms", "elapsed_ns"}
            for row in rows
        )

    def test_csv_and_jsonl_carry_identical_counters(self):
        report = sweep(2, 40)
        csv_lines = [l for l in to_csv(report).splitlines() if not l.startswith("#")]
        csv_rows = list(csv.DictReader(csv_lines))
        jsonl_rows = [json.loads(l) for l in to_jsonl(report).splitlines()[1:]]
        for a, b in zip(csv_rows, jsonl_rows):
            assert a["n"] == b["n"]
            assert int(a["divisions"]) == b["divisions"]
            assert int(a["terms"]) == b["terms"]

    def test_write_report_dispatches_on_extension(self, tmp_path):
        report = sweep(2, 10)
        csv_path = write_report(report, tmp_path / "r.csv")
        jsonl_path = write_report(report, tmp_path / "r.jsonl")
        assert csv_path.read_text().splitlines()[3] == CSV_HEADER
        assert json.loads(jsonl_path.read_text().splitlines()[0])["strategy"] == report.strategy

    def test_write_report_unknown_extension(self, tmp_path):
        with pytest.raises(ValueError, match="r.txt"):
            write_report(sweep(2, 4), tmp_path / "r.txt")
