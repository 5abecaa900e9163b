import pytest

from loopalg.spaces import SpaceParams, catalog_for


def _cat(token, n):
    return catalog_for(SpaceParams.from_token(token, n))


@pytest.fixture(scope="session")
def cp1():
    return _cat("cp", 1)


@pytest.fixture(scope="session")
def cp2():
    return _cat("cp", 2)


@pytest.fixture(scope="session")
def cp3():
    return _cat("cp", 3)


@pytest.fixture(scope="session")
def hp1():
    return _cat("hp", 1)


@pytest.fixture(scope="session")
def hp2():
    return _cat("hp", 2)


@pytest.fixture(scope="session")
def hp3():
    return _cat("hp", 3)
