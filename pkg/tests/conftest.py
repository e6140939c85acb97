import random

import pytest
from hypothesis import HealthCheck, settings

from softgamma import SoftSet, make_zn_gamma
from softgamma.cli import z8_example

settings.register_profile(
    "suite", derandomize=True, max_examples=100, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def z8():
    return make_zn_gamma(8, (2, 4, 6), strict=True)


@pytest.fixture(scope="session")
def z8_soft(z8):
    _, ss = z8_example()
    return ss


@pytest.fixture(scope="session")
def z4_full():
    return make_zn_gamma(4, (0, 1, 2, 3), strict=True)


def random_soft_set(rng: random.Random, universe, param_pool=("a", "b", "c", "d")) -> SoftSet:
    """Seeded sampler used by deterministic property loops."""
    universe = tuple(universe)
    size = rng.randint(1, min(3, len(param_pool)))
    idxs = sorted(rng.sample(range(len(param_pool)), size))
    params = tuple(param_pool[i] for i in idxs)
    masks = tuple(rng.getrandbits(len(universe)) for _ in params)
    return SoftSet(universe, params, masks)
