import numpy as np
import pytest

from loghankel.caratheodory import DEFAULT_SEED


@pytest.fixture
def rng():
    return np.random.default_rng(DEFAULT_SEED)
