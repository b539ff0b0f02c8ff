import pytest

from arcpack.instances import builtin


@pytest.fixture(scope="session")
def paper_T():
    return builtin("paper-T")


@pytest.fixture(scope="session")
def paper_Tprime():
    return builtin("paper-Tprime")


@pytest.fixture(scope="session")
def paper_T7():
    return builtin("paper-T7")


@pytest.fixture(scope="session")
def paper_T11():
    return builtin("paper-T11")
