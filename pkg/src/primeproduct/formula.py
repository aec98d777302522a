"""Primality from an exact floor/ceiling divisor product.

For an exact rational n/d the difference ceil(n/d) - floor(n/d) is 0 when d
divides n and 1 otherwise.  Multiplying that difference over every trial
divisor d = 2..isqrt(n) therefore yields 1 exactly when n is prime: any
proper divisor contributes a zero factor.  Everything on the evaluation path
is arbitrary-precision integer arithmetic; floats never enter.

Two evaluation strategies are provided.  ``literal`` evaluates every factor
of the product; ``short_circuit`` stops at the first zero factor.  They
always agree on the returned value, only the operation counts differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterator

# Type aliases documenting the domain: Natural is a non-negative Python int
# (arbitrary precision), Indicator is an int restricted to {0, 1}.
Natural = int
Indicator = int

LITERAL = "literal"
SHORT_CIRCUIT = "short_circuit"
STRATEGIES = (LITERAL, SHORT_CIRCUIT)


@dataclass(frozen=True)
class EvalStats:
    """Deterministic operation counts for one indicator evaluation.

    ``divisions`` counts remainder evaluations, ``terms`` counts product
    factors evaluated; each factor costs exactly one remainder, so the two
    coincide for every call.  ``short_circuited`` is True only when a zero
    factor ended the scan early (which forces a 0 result).
    """

    divisions: int
    terms: int
    short_circuited: bool


def _check_natural(n: int, name: str = "n") -> None:
    if n < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {n!r}")


def isqrt(n: Natural) -> Natural:
    """Exact floor square root: the unique k with k*k <= n < (k+1)*(k+1).

    Delegates to math.isqrt, which is exact at any magnitude (a floating
    sqrt would silently round past 2**53).  Raises ValueError for negative n.
    """
    return math.isqrt(n)


def fractionality(n: int, d: int) -> Indicator:
    """ceil(n/d) - floor(n/d) for the exact rational n/d.

    0 when d divides n exactly, 1 for every other rational, at any sign or
    magnitude.  Floor rounds toward negative infinity, ceiling toward
    positive infinity.  Computed with an integer remainder, which is exact;
    d == 0 raises ZeroDivisionError and d < 0 raises ValueError (the divisor
    domain is d >= 1).
    """
    if d < 0:
        raise ValueError(f"d must be >= 1, got {d}")
    return 1 if n % d else 0


def primality_indicator(
    n: Natural, strategy: str = SHORT_CIRCUIT
) -> tuple[Indicator, EvalStats]:
    """Evaluate the divisor product for n: (1, stats) iff n is prime.

    The product runs over d = 2..isqrt(n) in ascending order, each factor
    being ``fractionality(n, d)``.  For n < 2 the result is defined as 0
    with no factors evaluated (the bare empty product would give 1 and
    overcount primes).  Counts in the returned EvalStats are derived from
    the scan position and are bit-identical across runs and platforms.
    """
    _check_natural(n)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if n < 2:
        return 0, EvalStats(divisions=0, terms=0, short_circuited=False)
    root = math.isqrt(n)
    if strategy == SHORT_CIRCUIT:
        for d in range(2, root + 1):
            if n % d == 0:
                # Scanned d = 2..d inclusive: d - 1 factors, one remainder each.
                return 0, EvalStats(divisions=d - 1, terms=d - 1, short_circuited=True)
        full = root - 1
        return 1, EvalStats(divisions=full, terms=full, short_circuited=False)
    product = 1
    for d in range(2, root + 1):
        product *= 1 if n % d else 0
    full = root - 1
    return product, EvalStats(divisions=full, terms=full, short_circuited=False)


def _product_value(n: Natural) -> Indicator:
    # Bare scan used by the counting/streaming paths; same result as
    # primality_indicator, without the stats allocation.
    if n < 2:
        return 0
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return 0
    return 1


def prime_count(n: Natural) -> Natural:
    """Number of primes <= n: the indicator summed over 1..n.

    The term at 1 is 0 by definition, so the sum effectively starts at 2.
    Sequential evaluation; the value is independent of summation order.
    """
    _check_natural(n)
    total = 0
    for m in range(2, n + 1):
        total += _product_value(m)
    return total


def prime_stream(start: Natural = 0) -> Iterator[Natural]:
    """Yield every prime >= max(start, 2) in increasing order, lazily.

    Consuming m elements scans no further than the m-th yielded prime.
    """
    _check_natural(start, "start")
    return _stream_from(start if start > 2 else 2)


def _stream_from(n: int) -> Iterator[int]:
    while True:
        if _product_value(n):
            yield n
        n += 1


def nth_prime(k: Natural) -> Natural:
    """The k-th prime, 1-indexed: nth_prime(1) == 2.

    Scans the prime stream, so cost grows with k.  k < 1 raises ValueError.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1 (primes are 1-indexed), got {k!r}")
    return next(islice(prime_stream(), k - 1, None))
