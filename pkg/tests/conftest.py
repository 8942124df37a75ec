import pytest

from genus2frob import pipelines


@pytest.fixture(scope="session")
def f2_report():
    return pipelines.enumerate_f2(seed=0, triangle=True)


@pytest.fixture(scope="session")
def f3_report():
    return pipelines.enumerate_f3(generalized=True)
