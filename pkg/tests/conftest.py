import pytest

from permrestrict import oracle
from specsets import ALL_SPECS


@pytest.fixture(scope="session")
def brute_counts():
    """Exact counts for every reference spec at every n in 1..9.

    One census sweep per n; the whole table takes a couple of seconds and
    backs most of the acceptance criteria.
    """
    table = {}
    for n in range(1, 10):
        for spec, value in zip(ALL_SPECS, oracle.count_many(n, ALL_SPECS)):
            table[spec, n] = value
    return table
