"""Shared fixtures: expensive per-instance artifacts built once per session."""

import pytest

from ordpoly.combinat import Params
from ordpoly.verify import InstanceBundle


@pytest.fixture(scope="session")
def bundles():
    cache: dict[tuple[int, int, int], InstanceBundle] = {}

    def get(d: int, k: int, n: int) -> InstanceBundle:
        key = (d, k, n)
        if key not in cache:
            cache[key] = InstanceBundle(Params(d, k, n))
        return cache[key]

    return get


@pytest.fixture(scope="session")
def b568(bundles):
    return bundles(5, 6, 8)


@pytest.fixture(scope="session")
def b7915(bundles):
    return bundles(7, 9, 15)


@pytest.fixture(scope="session")
def b566(bundles):
    return bundles(5, 6, 6)


@pytest.fixture(scope="session")
def m58(bundles):
    return bundles(5, 5, 8)
