import pytest

from primeproduct.oracle import build_sieve


@pytest.fixture(scope="session")
def sieve_10k():
    return build_sieve(10_000)


@pytest.fixture(scope="session")
def sieve_million():
    return build_sieve(1_000_000)
