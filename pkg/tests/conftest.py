import pytest
from hypothesis import settings

from folbkit.corpus import connected_graphs

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def atlas5():
    return connected_graphs(5)


@pytest.fixture(scope="session")
def atlas6():
    return connected_graphs(6)
