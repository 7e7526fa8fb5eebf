"""Shared fixtures: prime tables are expensive, so build them once per session."""

import pytest

import edgebounds


@pytest.fixture(scope="session")
def table6():
    return edgebounds.build_table(10**6)


@pytest.fixture(scope="session")
def table4():
    return edgebounds.build_table(10**4)
