import pytest

from oracles import make_graph4, make_graph5


@pytest.fixture
def graph4():
    return make_graph4()


@pytest.fixture
def graph5():
    return make_graph5()
