from __future__ import annotations

import random

import pytest

from maxplus import EPS, IntervalMatrix, Matrix, TegSpec

e = EPS


def mat(rows):
    return Matrix.of(rows)


def rand_matrix(rng: random.Random, rows: int, cols: int, lo: int = -3, hi: int = 3,
                eps_extra: int = 1) -> Matrix:
    """Random matrix with entries drawn from {EPS} u [lo, hi].

    ``eps_extra`` controls how many extra EPS slots the choice pool carries.
    """
    pool = [EPS] * eps_extra + list(range(lo, hi + 1))
    return Matrix.of([[rng.choice(pool) for _ in range(cols)] for _ in range(rows)])


# --- the three-machine flow-shop application --------------------------------

FLOWSHOP_E = mat([
    [0, e, e, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, 0, e, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, 0, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, 0, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, 0, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, 0, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, 0, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 0, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, 0, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, 0, 0, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, 0, 0, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, e, e, 0, 0],
])

FLOWSHOP_A = mat([
    [e, e, 4, e, e, e, 2, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 3, e, 1, 7, e, e, e, e],
    [e, 5, e, e, e, e, e, e, 1, e, e, e, e, e, e],
    [4, e, e, e, e, 3, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, 3, 5, 1, 3],
    [e, e, 5, e, 4, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, 4, e, e, e, e, 3, e, e, e, e, e, e],
    [e, e, e, e, 3, e, 5, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, 2, e, 4, e, e, e, e, e, e, e],
    [e, e, 4, e, e, e, 2, e, e, e, e, e, e, e, e],
    [e, e, 4, e, e, e, 2, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 3, e, 1, 7, e, e, e, e],
    [e, e, e, e, e, e, e, 3, e, 1, 7, e, e, e, e],
    [4, e, e, e, e, 3, e, e, e, e, e, e, e, e, e],
    [4, e, e, e, e, 3, e, e, e, e, e, e, e, e, e],
])

FLOWSHOP_C = mat([
    [e, e, 0, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, 0, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 0, e, e, e, e, e, e, e],
])

FLOWSHOP_F = mat([
    [0, e, e, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, 0, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, 0, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, 0, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, 0, 0, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, e, e, 0, 0],
])

FLOWSHOP_U = mat([
    [e, e, 2, e, e, e],
    [4, e, e, e, e, e],
    [e, 4, e, 3, e, e],
    [e, e, e, e, e, e],
    [e, e, 2, e, e, e],
    [4, e, e, e, e, e],
])

FLOWSHOP_V = mat([
    [4, e, e],
    [e, 3, e],
    [e, e, e],
    [e, 2, 4],
    [4, e, e],
    [e, 3, e],
])

FLOWSHOP_SPEC = TegSpec(
    transitions=tuple(f"x{i}" for i in range(1, 10)),
    arcs=(
        ("x3", "x1", 4), ("x7", "x1", 2),
        ("x1", "x2", (1, 7)), ("x8", "x2", 3),
        ("x2", "x3", 5), ("x9", "x3", 1),
        ("x1", "x4", 4), ("x6", "x4", 3),
        ("x2", "x5", (3, 5)), ("x4", "x5", (1, 3)),
        ("x3", "x6", 5), ("x5", "x6", 4),
        ("x4", "x7", 4), ("x9", "x7", 3),
        ("x5", "x8", 3), ("x7", "x8", 5),
        ("x6", "x9", 2), ("x8", "x9", 4),
    ),
    observed=("x3", "x6", "x8"),
)

FLOWSHOP_ABAR = IntervalMatrix.of([
    [e, e, 4, e, e, e, 2, e, e],
    [(1, 7), e, e, e, e, e, e, 3, e],
    [e, 5, e, e, e, e, e, e, 1],
    [4, e, e, e, e, 3, e, e, e],
    [e, (3, 5), e, (1, 3), e, e, e, e, e],
    [e, e, 5, e, 4, e, e, e, e],
    [e, e, e, 4, e, e, e, e, 3],
    [e, e, e, e, 3, e, 5, e, e],
    [e, e, e, e, e, 2, e, 4, e],
])


@pytest.fixture
def flowshop():
    return {
        "E": FLOWSHOP_E, "A": FLOWSHOP_A, "C": FLOWSHOP_C,
        "F": FLOWSHOP_F, "U": FLOWSHOP_U, "V": FLOWSHOP_V,
        "spec": FLOWSHOP_SPEC, "abar": FLOWSHOP_ABAR,
    }


# --- the 2x2 running example (held state grows away from the observed part) --

SMALL_A = mat([[0, e], [e, 1]])          # x1 stays, x2 advances by one
SMALL_C = mat([[e, e]])                  # nothing observed
SMALL_B = mat([[e], [e]])                # no inputs
SMALL_EV = mat([[0, e], [0, 0]])         # kernel of: x1 and x1 (+) x2


@pytest.fixture
def small_example():
    return {"A": SMALL_A, "C": SMALL_C, "B": SMALL_B, "EV": SMALL_EV}
