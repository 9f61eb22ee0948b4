import random

import pytest

from circleact.core import FixedPointData, FixedPointDatum


def random_data(
    rng: random.Random,
    max_points: int = 4,
    max_arity: int = 3,
    max_weight: int = 6,
    allow_empty: bool = False,
) -> FixedPointData:
    lo = 0 if allow_empty else 1
    k = rng.randint(lo, max_points)
    n = rng.randint(1, max_arity)
    points = tuple(
        FixedPointDatum(
            rng.choice((-1, 1)),
            tuple(rng.randint(1, max_weight) for _ in range(n)),
        )
        for _ in range(k)
    )
    return FixedPointData(points)


@pytest.fixture
def rng():
    return random.Random(20260824)
