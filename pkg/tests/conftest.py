import random

import pytest
from hypothesis import strategies as st

from relgrowth import Relation


def random_relation(rng: random.Random, n: int, p: float) -> Relation:
    edges = [(u, v) for u in range(n) for v in range(n) if rng.random() < p]
    return Relation.from_edges(n, edges)


@st.composite
def relations(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    succ = tuple(
        draw(st.integers(min_value=0, max_value=(1 << n) - 1)) for _ in range(n)
    )
    return Relation(n, succ)


@pytest.fixture
def cycle5():
    return Relation.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
