import pytest

from leetoric import InterleavingMap, generator_matrix


@pytest.fixture(scope="session")
def code5():
    return generator_matrix(5)


@pytest.fixture(scope="session")
def map5(code5):
    return InterleavingMap(code5)


@pytest.fixture(scope="session")
def code6():
    return generator_matrix(6)


@pytest.fixture(scope="session")
def map6(code6):
    return InterleavingMap(code6)
