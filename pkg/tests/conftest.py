import pytest

from distideals.scan import enumerate_connected_graphs


@pytest.fixture(scope="session")
def corpus5():
    return [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def corpus6():
    return [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def corpus7():
    return [g for n in range(1, 8) for g in enumerate_connected_graphs(n)]
