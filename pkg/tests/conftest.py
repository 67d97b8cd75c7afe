import pytest

from kanlab import codiscrete_nerve, minimal_interval, one_point


@pytest.fixture(scope="session")
def minimal2():
    return minimal_interval(2)


@pytest.fixture(scope="session")
def minimal3():
    return minimal_interval(3)


@pytest.fixture(scope="session")
def codiscrete2():
    return codiscrete_nerve(("0", "1"), 2)


@pytest.fixture(scope="session")
def codiscrete3():
    return codiscrete_nerve(("0", "1"), 3)


@pytest.fixture(scope="session")
def point2():
    return one_point(2)
