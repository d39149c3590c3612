"""Shared fixtures: the standard spaces, the three-player example and matching pennies."""

from pathlib import Path

import pytest

from src.core.game import Game, GameSpace, from_table
from src.core.sampling import make_rng

DATA_DIR = Path(__file__).parent.parent / "data" / "games"

TABLE_ONE_ROWS = [
    [26, 9, 12, 4, 14, 6, 14, 6],
    [-5, -5, 2, 2, 2, 2, 4, 4],
    [18, 10, 4, 5, 7, 8, 7, 8],
]

TABLE_ONE_VECTOR = [26, 9, 12, 4, 14, 6, 14, 6, -5, -5, 2, 2, 2, 2, 4, 4, 18, 10, 4, 5, 7, 8, 7, 8]

SQUARE = GameSpace((2, 2))
RECT = GameSpace((2, 3))
CUBE = GameSpace((2, 2, 2))

ACCEPTANCE_SPACES = [SQUARE, RECT, CUBE]


@pytest.fixture
def table_one() -> Game:
    return from_table(CUBE, TABLE_ONE_ROWS)


@pytest.fixture
def matching_pennies() -> Game:
    return from_table(SQUARE, [[1, -1, -1, 1], [-1, 1, 1, -1]])


@pytest.fixture
def rng():
    return make_rng(20240617)


@pytest.fixture(params=ACCEPTANCE_SPACES, ids=str)
def space(request) -> GameSpace:
    return request.param
