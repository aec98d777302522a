"""Independent ground-truth primality: sieve of Eratosthenes, trial division.

These are the validation oracles for the product-formula evaluator.  Nothing
here imports from the formula module; the only shared machinery is built-in
integer arithmetic, so agreement between the two paths is evidence rather
than tautology.
"""

from __future__ import annotations

import math
from typing import Iterator

DEFAULT_SIEVE_CAP = 2**31


class SieveCapError(ValueError):
    """Requested sieve limit exceeds the configured cap."""


class SieveTable:
    """Bit-per-integer primality table over [0, limit].

    Bit n is set exactly when n is prime; bits 0 and 1 are always clear.
    Immutable after construction and safe to share across threads.
    """

    __slots__ = ("limit", "_bits")

    def __init__(self, limit: int, bits: bytes):
        if limit < 0:
            raise ValueError(f"limit must be non-negative, got {limit}")
        expected = (limit + 8) // 8
        if len(bits) != expected:
            raise ValueError(
                f"bit table for limit {limit} needs {expected} bytes, got {len(bits)}"
            )
        self.limit = limit
        self._bits = bytes(bits)

    def __len__(self) -> int:
        return self.limit + 1

    def __getitem__(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise IndexError(f"{n} is outside [0, {self.limit}]")
        return bool((self._bits[n >> 3] >> (n & 7)) & 1)

    def count(self) -> int:
        """Number of primes in [0, limit] (popcount of the table)."""
        return int.from_bytes(self._bits, "little").bit_count()

    def primes(self) -> Iterator[int]:
        """Yield the primes <= limit in increasing order."""
        bits = self._bits
        for n in range(2, self.limit + 1):
            if (bits[n >> 3] >> (n & 7)) & 1:
                yield n


def build_sieve(limit: int, cap: int = DEFAULT_SIEVE_CAP) -> SieveTable:
    """Sieve of Eratosthenes over [0, limit], packed one bit per integer.

    Marking runs on a byte-per-integer scratch buffer (slice assignment is
    C-speed in CPython) which is then packed into the bit table.  Limits
    above ``cap`` raise SieveCapError before anything is allocated.
    """
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    if limit > cap:
        raise SieveCapError(f"sieve limit {limit} exceeds the cap of {cap}")
    size = limit + 1
    flags = bytearray(b"\x01") * size
    for i in range(min(2, size)):
        flags[i] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start::p] = bytes(len(range(start, size, p)))
    # Pack flag i onto bit i: eight strided byte slices, slice `off` holding
    # the flags of integers congruent to off mod 8, OR-ed in at bit offset off.
    packed = 0
    for off in range(8):
        packed |= int.from_bytes(flags[off::8], "little") << off
    return SieveTable(limit, packed.to_bytes((limit + 8) // 8, "little"))


def trial_division_is_prime(n: int) -> int:
    """1 iff n >= 2 and no d in 2..isqrt(n) divides n, else 0.

    Plain trial division over odd candidates after 2; works at any
    magnitude (slowly, for large n).
    """
    if n < 2:
        return 0
    if n < 4:
        return 1
    if n % 2 == 0:
        return 0
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return 0
    return 1


def smallest_factor(n: int) -> int:
    """Least divisor >= 2 of n (n itself when n is prime).  Requires n >= 2."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return d
    return n
