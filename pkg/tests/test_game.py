"""Profiles, payoff vectors and payoff tables."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import InvalidProfileError, ShapeError
from src.core.game import (
    Game,
    GameSpace,
    from_table,
    index_to_profile,
    payoff,
    profile_label,
    profile_to_index,
    profile_vector,
    profiles,
    to_table,
)
from src.core.linalg import RationalMatrix
from tests.conftest import CUBE, RECT, SQUARE, TABLE_ONE_ROWS, TABLE_ONE_VECTOR


def test_space_sizes():
    assert (CUBE.n, CUBE.k, CUBE.dim) == (3, 8, 24)
    assert (RECT.n, RECT.k, RECT.dim) == (2, 6, 12)
    assert str(RECT) == "G[2;2,3]"
    assert GameSpace.parse("2,2,2") == CUBE


def test_space_rejects_single_strategy():
    with pytest.raises(ShapeError):
        GameSpace((2, 1))


@pytest.mark.parametrize(
    "space, profile, index",
    [(CUBE, (1, 1, 1), 1), (CUBE, (2, 2, 2), 8), (RECT, (2, 1), 4)],
)
def test_profile_index_examples(space, profile, index):
    assert profile_to_index(space, profile) == index
    assert index_to_profile(space, index) == profile


@pytest.mark.parametrize("space", [SQUARE, RECT, CUBE, GameSpace((3, 2, 4))], ids=str)
def test_profile_index_matches_semi_tensor_product(space):
    seen = set()
    for profile in profiles(space):
        idx = profile_to_index(space, profile)
        assert profile_vector(space, profile) == RationalMatrix.delta(space.k, idx)
        assert index_to_profile(space, idx) == profile
        seen.add(idx)
    assert seen == set(range(1, space.k + 1))


def test_invalid_profiles():
    with pytest.raises(InvalidProfileError):
        profile_to_index(RECT, (1, 4))
    with pytest.raises(InvalidProfileError):
        profile_to_index(RECT, (1,))
    with pytest.raises(InvalidProfileError):
        index_to_profile(RECT, 7)


def test_table_one_payoffs(table_one):
    assert list(table_one.v) == TABLE_ONE_VECTOR
    assert payoff(table_one, 1, (1, 1, 1)) == 26
    assert payoff(table_one, 2, (2, 2, 2)) == 4


def test_table_one_labels():
    labels = [profile_label(CUBE, p) for p in profiles(CUBE)]
    assert labels == ["111", "112", "121", "122", "211", "212", "221", "222"]


def test_zero_game_payoffs():
    zero = Game.zero(RECT)
    assert all(payoff(zero, i, p) == 0 for i in (1, 2) for p in profiles(RECT))


def test_single_player_space():
    space = GameSpace((2,))
    g = from_table(space, [[Fraction(1, 3), -2]])
    assert g.v == (Fraction(1, 3), Fraction(-2))


def test_from_table_shape_mismatch():
    with pytest.raises(ShapeError):
        from_table(CUBE, TABLE_ONE_ROWS[:2])
    with pytest.raises(ShapeError):
        from_table(CUBE, [row[:7] for row in TABLE_ONE_ROWS])


@pytest.mark.parametrize("space", [SQUARE, RECT, CUBE, GameSpace((2, 2, 3)), GameSpace((4, 3))], ids=str)
def test_payoff_reads_table_exhaustively(space, rng):
    rows = [[Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 5))) for _ in range(space.k)] for _ in range(space.n)]
    g = from_table(space, rows)
    for i in range(1, space.n + 1):
        for p in profiles(space):
            assert payoff(g, i, p) == rows[i - 1][profile_to_index(space, p) - 1]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=7), min_size=12, max_size=12))
def test_table_round_trip(values):
    rows = [values[:6], values[6:]]
    assert to_table(from_table(RECT, rows)) == rows


def test_game_arithmetic(table_one):
    doubled = table_one + table_one
    assert doubled == table_one.scale(2)
    assert (doubled - table_one) == table_one
    assert (table_one + -table_one).is_zero()
