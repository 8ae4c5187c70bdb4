import numpy as np
import pytest

from pcties.core import GtGraph, validate_matrix

# Worked 5x5 example: 8 directed pairs, ties {1,3} and {1,5} (1-based),
# five inconsistent triads, generalized coefficient exactly 1/2.
WORKED_MATRIX = [
    [0, 1, 0, 1, 0],
    [-1, 0, 1, 1, 1],
    [0, -1, 0, 1, -1],
    [-1, -1, -1, 0, 1],
    [0, -1, 1, -1, 0],
]

# Reference maximal tournaments for n = 6 and n = 7 (asserted byte-exact
# against the generator).
MAX_T6 = [
    [0, 1, 1, 1, -1, -1],
    [-1, 0, 1, 1, 1, -1],
    [-1, -1, 0, 1, 1, 1],
    [-1, -1, -1, 0, 1, 1],
    [1, -1, -1, -1, 0, 1],
    [1, 1, -1, -1, -1, 0],
]

MAX_T7 = [
    [0, 1, 1, 1, -1, -1, -1],
    [-1, 0, 1, 1, 1, -1, -1],
    [-1, -1, 0, 1, 1, 1, -1],
    [-1, -1, -1, 0, 1, 1, 1],
    [1, -1, -1, -1, 0, 1, 1],
    [1, 1, -1, -1, -1, 0, 1],
    [1, 1, 1, -1, -1, -1, 0],
]


def fig3_graph() -> GtGraph:
    """n=4: vertex 2 beats 1 and vertex 4 beats 3 (1-based), rest tied."""
    rel = np.zeros((4, 4), dtype=np.int8)
    rel[1, 0], rel[0, 1] = 1, -1
    rel[3, 2], rel[2, 3] = 1, -1
    return GtGraph._from_rel(rel)


def random_tournament(n: int, rng: np.random.Generator) -> GtGraph:
    rel = np.zeros((n, n), dtype=np.int8)
    i, j = np.triu_indices(n, 1)
    signs = (rng.integers(0, 2, size=len(i), dtype=np.int8) * 2 - 1).astype(np.int8)
    rel[i, j] = signs
    rel[j, i] = -signs
    return GtGraph._from_rel(rel)


def random_gt(n: int, rng: np.random.Generator) -> GtGraph:
    rel = np.zeros((n, n), dtype=np.int8)
    i, j = np.triu_indices(n, 1)
    vals = rng.integers(-1, 2, size=len(i)).astype(np.int8)
    rel[i, j] = vals
    rel[j, i] = -vals
    return GtGraph._from_rel(rel)


@pytest.fixture
def worked_matrix():
    return validate_matrix(WORKED_MATRIX)
