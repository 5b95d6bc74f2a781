import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def sym_rand(rng, n, scale=1.0):
    """Random symmetric matrix (test helper)."""
    g = rng.standard_normal((n, n)) * scale
    return (g + g.T) / 2.0
