import random

import pytest
from hypothesis import strategies as st

from abelcover.presentation import Presentation, validate


def random_presentation(rng: random.Random, max_n: int = 10, max_m: int = 3) -> Presentation:
    N = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    rows = []
    for _ in range(m):
        head = [rng.randrange(N) for _ in range(3)]
        rows.append(head + [-sum(head) % N])
    return validate(N, rows)


@st.composite
def presentations(draw, max_n=10, max_m=3):
    N = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    rows = []
    for _ in range(m):
        head = draw(st.lists(st.integers(0, N - 1), min_size=3, max_size=3))
        rows.append(head + [-sum(head) % N])
    return validate(N, rows)


@pytest.fixture
def rng():
    return random.Random(20261016)
