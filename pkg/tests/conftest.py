import numpy as np
import pytest

from mirrorew import catalog


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def full_catalog():
    return catalog.default_catalog()
