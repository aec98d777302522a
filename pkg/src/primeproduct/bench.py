"""Instrumented sweeps of the product evaluator, with machine-readable reports.

A sweep measures one indicator call per integer in a closed range and records
the deterministic operation counters next to wall time.  Counters are safe to
assert on in CI; elapsed time is informational only and never asserted.

Report formats (same row model for both):
  CSV        header ``n,indicator,divisions,terms,elapsed_ns``, with metadata
             as leading ``# key=value`` comment lines.
  JSON-lines a leading metadata object, then one object per row using the
             same field names, n serialized as a decimal string.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .formula import SHORT_CIRCUIT, STRATEGIES, primality_indicator

DEFAULT_ROW_CAP = 1_000_000

CSV_HEADER = "n,indicator,divisions,terms,elapsed_ns"


class IntegrityError(Exception):
    """Two reports disagree on an indicator value: a core evaluator bug."""


@dataclass(frozen=True)
class BenchRow:
    n: int
    indicator: int
    divisions: int
    terms: int
    elapsed_ns: int


@dataclass(frozen=True)
class BenchReport:
    """Rows in measurement order (n strictly increasing) plus run metadata."""

    rows: tuple[BenchRow, ...]
    strategy: str
    timestamp: str
    version: str


@dataclass(frozen=True)
class RatioRow:
    n: int
    divisions_ratio: float
    elapsed_ratio: float


@dataclass(frozen=True)
class ComparisonSummary:
    """Per-n and aggregate ratios of report B against report A."""

    rows: tuple[RatioRow, ...]
    divisions_a: int
    divisions_b: int
    divisions_ratio: float
    elapsed_ns_a: int
    elapsed_ns_b: int
    elapsed_ratio: float


def sweep(
    start: int,
    stop: int,
    strategy: str = SHORT_CIRCUIT,
    row_cap: int = DEFAULT_ROW_CAP,
) -> BenchReport:
    """Measure the indicator on every n in [start, stop], one row per n.

    Requires 2 <= start <= stop and (stop - start) < row_cap.  EvalStats
    fields are copied verbatim into the rows; elapsed_ns wraps the single
    indicator call with a monotonic clock.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if start < 2:
        raise ValueError(f"sweeps start at 2 or above, got {start}")
    if stop < start:
        raise ValueError(f"empty sweep: stop {stop} is below start {start}")
    if stop - start >= row_cap:
        raise ValueError(
            f"sweep of {stop - start + 1} rows exceeds the row cap of {row_cap}"
        )
    timestamp = datetime.now(timezone.utc).isoformat()
    rows = []
    for n in range(start, stop + 1):
        t0 = time.perf_counter_ns()
        value, stats = primality_indicator(n, strategy)
        elapsed = time.perf_counter_ns() - t0
        rows.append(BenchRow(n, value, stats.divisions, stats.terms, elapsed))
    from . import __version__

    return BenchReport(tuple(rows), strategy, timestamp, __version__)


def _ratio(a: int, b: int) -> float:
    # 0/0 pairs (e.g. the empty products at n = 2, 3) compare as equal work.
    if a == b:
        return 1.0
    if a == 0:
        return math.inf
    return b / a


def compare(report_a: BenchReport, report_b: BenchReport) -> ComparisonSummary:
    """Ratios of report_b against report_a, row by row and in aggregate.

    Raises ValueError when the reports cover different n ranges and
    IntegrityError when any indicator differs (strategies must agree on the
    value for every n, so a mismatch means the evaluator is broken).
    """
    ns_a = [row.n for row in report_a.rows]
    ns_b = [row.n for row in report_b.rows]
    if ns_a != ns_b:
        raise ValueError("reports cover different n ranges and cannot be compared")
    rows = []
    for a, b in zip(report_a.rows, report_b.rows):
        if a.indicator != b.indicator:
            raise IntegrityError(
                f"indicator mismatch at n={a.n}: {a.indicator} vs {b.indicator}"
            )
        rows.append(RatioRow(a.n, _ratio(a.divisions, b.divisions), _ratio(a.elapsed_ns, b.elapsed_ns)))
    div_a = sum(row.divisions for row in report_a.rows)
    div_b = sum(row.divisions for row in report_b.rows)
    el_a = sum(row.elapsed_ns for row in report_a.rows)
    el_b = sum(row.elapsed_ns for row in report_b.rows)
    return ComparisonSummary(
        rows=tuple(rows),
        divisions_a=div_a,
        divisions_b=div_b,
        divisions_ratio=_ratio(div_a, div_b),
        elapsed_ns_a=el_a,
        elapsed_ns_b=el_b,
        elapsed_ratio=_ratio(el_a, el_b),
    )


def to_csv(report: BenchReport) -> str:
    lines = [
        f"# strategy={report.strategy}",
        f"# timestamp={report.timestamp}",
        f"# version={report.version}",
        CSV_HEADER,
    ]
    for row in report.rows:
        lines.append(f"{row.n},{row.indicator},{row.divisions},{row.terms},{row.elapsed_ns}")
    return "\n".join(lines) + "\n"


def to_jsonl(report: BenchReport) -> str:
    meta = {
        "strategy": report.strategy,
        "timestamp": report.timestamp,
        "version": report.version,
    }
    lines = [json.dumps(meta)]
    for row in report.rows:
        lines.append(
            json.dumps(
                {
                    "n": str(row.n),
                    "indicator": row.indicator,
                    "divisions": row.divisions,
                    "terms": row.terms,
                    "elapsed_ns": row.elapsed_ns,
                }
            )
        )
    return "\n".join(lines) + "\n"


def write_report(report: BenchReport, path: str | Path) -> Path:
    """Write the report as CSV or JSON-lines, chosen by the path extension."""
    target = Path(path)
    suffix = target.suffix.lower()
    if suffix == ".csv":
        text = to_csv(report)
    elif suffix == ".jsonl":
        text = to_jsonl(report)
    else:
        raise ValueError(
            f"cannot infer report format from {target.name!r}: use .csv or .jsonl"
        )
    target.write_text(text, encoding="ascii")
    return target
