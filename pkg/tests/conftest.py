import itertools
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from toriglue.io import parse_graph, parse_matrix
from toriglue.linalg import IntMatrix

settings.register_profile(
    "repro", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

EXAMPLES = Path(__file__).resolve().parent.parent / "examples"


def load_matrix(name: str) -> IntMatrix:
    return parse_matrix((EXAMPLES / name).read_text())


def load_graph(name: str):
    return parse_graph((EXAMPLES / name).read_text())


@pytest.fixture
def examples_dir():
    return EXAMPLES


def random_homogeneous(rng: random.Random, max_rows=3, max_cols=5, max_entry=6,
                       min_cols=2) -> IntMatrix:
    """Random homogeneous matrix over N, built from a random nonnegative certificate."""
    while True:
        n = rng.randint(1, max_rows)
        p = rng.randint(min_cols, max_cols)
        lam = [rng.choice((0, 1, 1, 2)) for _ in range(n)]
        if not any(lam):
            continue
        cols = [c for c in itertools.product(range(max_entry + 1), repeat=n)
                if any(c)]
        d = rng.choice(sorted({sum(l * x for l, x in zip(lam, c)) for c in cols} - {0}))
        fitting = [c for c in cols if sum(l * x for l, x in zip(lam, c)) == d]
        if len(fitting) < 1:
            continue
        picked = [rng.choice(fitting) for _ in range(p)]
        return IntMatrix.from_columns(picked)
