import pytest

from hyperspec.hopfkernel import parse_builtin


@pytest.fixture(scope="session")
def mu32():
    return parse_builtin("mu:3:2")


@pytest.fixture(scope="session")
def mu54():
    return parse_builtin("mu:5:4")


@pytest.fixture(scope="session")
def ae31():
    return parse_builtin("addetale:3:1")


@pytest.fixture(scope="session")
def ae32():
    return parse_builtin("addetale:3:2")


@pytest.fixture(scope="session")
def suite_algebras(mu32, mu54, ae31, ae32):
    return [mu32, mu54, ae31, ae32]
