import pytest

from redwords.arrangement import sweep


@pytest.fixture(scope="session")
def sweep_reports():
    """Conjecture sweeps for n = 4, 5, 6, shared across acceptance tests.

    n = 6 is the expensive one; the only permutation over the default
    200,000-vertex cap is 654321, which gets a Skipped record.
    """
    return {n: sweep(n) for n in (4, 5, 6)}
