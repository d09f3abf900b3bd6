import numpy as np
import pytest

from skewcode.gf import field_from_q

SEED = 20240601


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def F9():
    return field_from_q(9)


@pytest.fixture(scope="session")
def F25():
    return field_from_q(25)


@pytest.fixture(scope="session")
def F49():
    return field_from_q(49)
