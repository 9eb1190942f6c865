import random

import pytest

from fatsep.geometry import AxisBox, Ball


def random_objects(seed, n, d=2, shape="ball", span=10.0):
    """Small deterministic object soup for property tests."""
    rng = random.Random(seed)
    objs = []
    for _ in range(n):
        c = [rng.uniform(0, span) for _ in range(d)]
        if shape == "ball":
            objs.append(Ball(tuple(c), rng.uniform(0.3, 1.5)))
        else:
            halves = [rng.uniform(0.3, 0.6) for _ in range(d)]
            objs.append(
                AxisBox(
                    tuple(x - h for x, h in zip(c, halves)),
                    tuple(x + h for x, h in zip(c, halves)),
                )
            )
    return objs


@pytest.fixture
def rng():
    return random.Random(0)
