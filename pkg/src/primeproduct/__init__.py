"""Primes from an exact floor/ceiling divisor product.

The formula module evaluates the product with exact integer arithmetic, the
oracle module provides independent ground truth (sieve and trial division),
and the bench module measures the evaluator with deterministic operation
counters.  A CLI front end lives in primeproduct.cli.
"""

__version__ = "0.1.0"

from .bench import (
    BenchReport,
    BenchRow,
    ComparisonSummary,
    IntegrityError,
    RatioRow,
    compare,
    sweep,
    to_csv,
    to_jsonl,
    write_report,
)
from .formula import (
    LITERAL,
    SHORT_CIRCUIT,
    STRATEGIES,
    EvalStats,
    Indicator,
    Natural,
    fractionality,
    isqrt,
    nth_prime,
    primality_indicator,
    prime_count,
    prime_stream,
)
from .oracle import (
    DEFAULT_SIEVE_CAP,
    SieveCapError,
    SieveTable,
    build_sieve,
    smallest_factor,
    trial_division_is_prime,
)

__all__ = [
    "__version__",
    "BenchReport",
    "BenchRow",
    "ComparisonSummary",
    "DEFAULT_SIEVE_CAP",
    "EvalStats",
    "Indicator",
    "IntegrityError",
    "LITERAL",
    "Natural",
    "RatioRow",
    "SHORT_CIRCUIT",
    "STRATEGIES",
    "SieveCapError",
    "SieveTable",
    "build_sieve",
    "compare",
    "fractionality",
    "isqrt",
    "nth_prime",
    "primality_indicator",
    "prime_count",
    "prime_stream",
    "smallest_factor",
    "sweep",
    "to_csv",
    "to_jsonl",
    "trial_division_is_prime",
    "write_report",
]
