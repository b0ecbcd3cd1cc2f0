import pytest
from hypothesis import settings

from gcones.algebra import builtin_algebra
from gcones.stability import build_catalog

settings.register_profile("gcones", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("gcones")


@pytest.fixture(scope="session")
def a2():
    return builtin_algebra("a2")


@pytest.fixture(scope="session")
def a3():
    return builtin_algebra("a3")


@pytest.fixture(scope="session")
def cycle3():
    return builtin_algebra("cycle3")


@pytest.fixture(scope="session")
def kron2():
    return builtin_algebra("kronecker2")


@pytest.fixture(scope="session")
def kron3():
    return builtin_algebra("kronecker3")


@pytest.fixture(scope="session")
def ss2():
    return builtin_algebra("semisimple2")


@pytest.fixture(scope="session")
def a2_twin(a2):
    return a2.with_prime(2)


@pytest.fixture(scope="session")
def a2_catalog(a2):
    return build_catalog(a2, q=2, dim_cap=8)


@pytest.fixture(scope="session")
def ss2_catalog(ss2):
    return build_catalog(ss2, q=2, dim_cap=8)
