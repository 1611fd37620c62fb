import math
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "numeric",
    deadline=None,
    max_examples=75,
    derandomize=True,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("numeric")


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_scatter_params(rng, *, e_range=(1.3, 4.5), v0_range=(0.0, 8.0)):
    """Valid parameters kept away from the |E - V0| = 1 crossover."""
    from kgbarrier import ScatterParams

    while True:
        e = rng.uniform(*e_range)
        v0 = rng.uniform(*v0_range)
        if abs(abs(e - v0) - 1.0) < 0.05:
            continue
        return ScatterParams(E=e, V0=v0, a=rng.uniform(0.1, 1.0), x0=rng.uniform(-3.0, 0.0))


def random_whittaker_index(rng):
    from kgbarrier import WhittakerIndex

    e = rng.uniform(1.2, 4.0)
    a = rng.uniform(0.1, 1.0)
    return WhittakerIndex(kappa=complex(0, a * e), mu=complex(0, a * math.sqrt(e * e - 1.0)))
