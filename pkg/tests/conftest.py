import numpy as np
import pytest

from randlp import GeneratorParams


@pytest.fixture
def demo_params():
    """The standard 2-D demonstration setup."""
    return GeneratorParams(n=2, d=5, seed=42)


def make_params(**kw) -> GeneratorParams:
    base = dict(n=2, d=5, seed=42)
    base.update(kw)
    return GeneratorParams(**base)


def rng(seed=0):
    return np.random.default_rng(seed)
