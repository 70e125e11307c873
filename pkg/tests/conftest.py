import numpy as np
from hypothesis import HealthCheck, settings

from wigner_abcd import boost, rotation_half, squeeze

settings.register_profile(
    "ci", derandomize=True, max_examples=200, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci")

_FACTORIES = (rotation_half, boost, squeeze)


def random_unimodular(rng, n_factors=4, scale=3.0):
    """Product of random rotations, boosts and squeezes with bounded parameters."""
    m = np.eye(2)
    for _ in range(n_factors):
        kind = int(rng.integers(0, 3))
        m = m @ _FACTORIES[kind](float(rng.uniform(-scale, scale)))
    return m
