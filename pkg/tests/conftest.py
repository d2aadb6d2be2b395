from __future__ import annotations

import time

import pytest

from hypersemigroups import enumerate_hypergroupoids, random_hypergroupoid

# fixed population for the order-3 sampled runs; shared so the regular
# survivors feed the ideal-identity checks as well
ORDER3_SEED = "acceptance-order3"
ORDER3_SAMPLE = 100_000


@pytest.fixture(scope="session")
def order2_tables():
    return list(enumerate_hypergroupoids(2))


@pytest.fixture(scope="session")
def order2_hypersemigroups(order2_tables):
    return [h for h in order2_tables if h.is_hypersemigroup()]


@pytest.fixture(scope="session")
def order3_survivors():
    """Associative survivors of the fixed 10^5 order-3 sample, with the
    wall-clock seconds the filter took (counted against the acceptance
    budget)."""
    start = time.perf_counter()
    survivors = []
    for i in range(ORDER3_SAMPLE):
        h = random_hypergroupoid(3, f"{ORDER3_SEED}:{i}")
        if h.is_hypersemigroup():
            survivors.append(h)
    return survivors, time.perf_counter() - start
