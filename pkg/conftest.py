"""Shared fixtures: the shifted skew running example and small shape suites."""

import pytest
from hypothesis import strategies as st

from shape_core import make_shape
from tableaux import Filling, enumerate_standard, permutation_from_word


EXAMPLE_SHAPE = make_shape((6, 5, 4, 2), (5, 3), shifted=True)

EXAMPLE_ROWS = {
    "R": [[8], [3, 6], [9, 5, 1, 4], [2, 7]],
    "P": [[2], [1, 5], [3, 4, 6, 8], [7, 9]],
    "Q": [[4], [3, 6], [1, 2, 5, 8], [7, 9]],
    "Q_pi_inverse": [[8], [1, 5], [6, 7, 4, 2], [9, 3]],
}

EXAMPLE_PI = (3, 8, 9, 5, 6, 1, 2, 4, 7)

# Shapes swept exhaustively by the property suites
SUITE_SHAPES = [
    make_shape((2, 2)),
    make_shape((3, 1)),
    make_shape((2, 2, 1)),
    make_shape((3, 2), (1, 0)),
    make_shape((3, 2), shifted=True),
    make_shape((3, 2, 1), (2,), shifted=True),
    make_shape((4, 2), (1,), shifted=True),
]


def example(name: str) -> Filling:
    return Filling.from_rows(EXAMPLE_SHAPE, EXAMPLE_ROWS[name])


@pytest.fixture
def shape():
    return EXAMPLE_SHAPE


@pytest.fixture
def R():
    return example("R")


@pytest.fixture
def P():
    return example("P")


@pytest.fixture
def Q():
    return example("Q")


@pytest.fixture
def Q_pi_inverse():
    return example("Q_pi_inverse")


@pytest.fixture
def pi():
    return permutation_from_word(EXAMPLE_PI)


@st.composite
def tabloid_and_order(draw, shapes=tuple(SUITE_SHAPES)):
    """A suite shape, a random tabloid of it and a random standard filling of it."""
    shape = draw(st.sampled_from(shapes))
    word = draw(st.permutations(list(range(1, shape.n + 1))))
    order = draw(st.sampled_from(enumerate_standard(shape)))
    return Filling(shape, tuple(word)), order
