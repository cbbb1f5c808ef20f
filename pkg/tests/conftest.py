import pytest

from kltangent import build_root_system


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A3")


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B2")


@pytest.fixture(scope="session")
def b3():
    return build_root_system("B3")


@pytest.fixture(scope="session")
def d4():
    return build_root_system("D4")
