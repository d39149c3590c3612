"""Inner products and orthogonal projection."""

import json
from fractions import Fraction

import pytest

from src.core.errors import NotPositiveDefiniteError, UnknownNameError
from src.core.game import Game, from_table
from src.core.linalg import RationalMatrix
from src.core.sampling import random_game, random_matrix
from src.inner_products.inner import (
    InnerProduct,
    candogan_ip,
    inner,
    project,
    standard_ip,
    weight_from_descriptor,
)
from src.subspaces import (
    Subspace,
    common_interest_space,
    harmonic_space,
    non_strategic_space,
    normalized_space,
    orth_complement,
    potential_space,
    span_equal,
    zero_sum_space,
)
from src.subspaces.subspace import is_member
from tests.conftest import CUBE, RECT, SQUARE


def unit(space, i) -> Game:
    """Game with a single 1 at coordinate i (1-based)."""
    return Game(space, [1 if j == i - 1 else 0 for j in range(space.dim)])


def test_standard_inner_product(rng):
    ip = standard_ip(RECT)
    assert inner(ip, unit(RECT, 1), unit(RECT, 2)) == 0
    assert inner(ip, unit(RECT, 1), unit(RECT, 1)) == 1
    x, y = random_game(RECT, rng), random_game(RECT, rng)
    assert inner(ip, x, y) == sum(a * b for a, b in zip(x.v, y.v))


def test_candogan_weight():
    ip = candogan_ip(RECT)
    assert ip.q == RationalMatrix.diagonal([2] * 6 + [3] * 6)
    assert inner(ip, unit(RECT, 1), unit(RECT, 1)) == 2
    assert inner(ip, unit(RECT, 7), unit(RECT, 7)) == 3
    assert not ip.is_scalar


def test_candogan_is_scalar_on_equal_strategies():
    ip = candogan_ip(CUBE)
    assert ip.q == RationalMatrix.identity(CUBE.dim).scale(2)
    assert ip.is_scalar


def test_inner_with_zero_and_symmetry(rng):
    ip = candogan_ip(RECT)
    y = random_game(RECT, rng)
    assert inner(ip, Game.zero(RECT), y) == 0
    x = random_game(RECT, rng)
    assert inner(ip, x, y) == inner(ip, y, x)
    assert inner(ip, x, x) > 0


def test_zero_sum_part_orthogonal_to_common_interest(matching_pennies):
    z_part = project(standard_ip(SQUARE), zero_sum_space(SQUARE), matching_pennies)
    common = from_table(SQUARE, [[3, Fraction(1, 2), -2, 7]] * 2)
    assert inner(standard_ip(SQUARE), z_part, common) == 0


def test_non_spd_weights_rejected():
    q = RationalMatrix.diagonal([1, 1, 1, 1, 1, 1, 1, -1])
    with pytest.raises(NotPositiveDefiniteError) as info:
        InnerProduct(SQUARE, q)
    assert info.value.pivot == 8
    asymmetric = RationalMatrix.identity(8) + RationalMatrix.from_rows(
        [[1 if (i, j) == (0, 1) else 0 for j in range(8)] for i in range(8)]
    )
    with pytest.raises(NotPositiveDefiniteError):
        InnerProduct(SQUARE, asymmetric)


def test_weight_descriptors(tmp_path):
    assert weight_from_descriptor(SQUARE, "standard").q == RationalMatrix.identity(8)
    path = tmp_path / "q.json"
    rows = [[2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(8)] for i in range(8)]
    path.write_text(json.dumps({"dim": 8, "q": rows}))
    ip = weight_from_descriptor(SQUARE, f"file:{path}")
    assert ip.q == RationalMatrix.from_rows(rows)
    preset = tmp_path / "preset.json"
    preset.write_text(json.dumps({"preset": "candogan"}))
    assert weight_from_descriptor(RECT, f"file:{preset}").q == candogan_ip(RECT).q
    with pytest.raises(UnknownNameError):
        weight_from_descriptor(SQUARE, "hilbert")


# --- projection ----------------------------------------------------------

def test_projection_examples():
    ip = standard_ip(SQUARE)
    g = from_table(SQUARE, [[4, 0, 0, 0], [0, 0, 0, 0]])
    assert project(ip, common_interest_space(SQUARE), g) == from_table(SQUARE, [[2, 0, 0, 0], [2, 0, 0, 0]])
    common = from_table(SQUARE, [[1, 2, 3, 4], [1, 2, 3, 4]])
    assert project(ip, zero_sum_space(SQUARE), common).is_zero()
    assert project(ip, common_interest_space(SQUARE), common) == common


def test_projection_residual_is_orthogonal(rng):
    ip = candogan_ip(RECT)
    s = normalized_space(RECT)
    g = random_game(RECT, rng)
    p = project(ip, s, g)
    assert is_member(s, p)
    residual = g - p
    assert all(inner(ip, residual, b) == 0 for b in s.basis_games())


def _random_weight(space, rng, choice):
    if choice == 0:
        return standard_ip(space)
    if choice == 1:
        return candogan_ip(space)
    m = random_matrix(rng, space.dim, space.dim)
    return InnerProduct(space, m.transpose() @ m + RationalMatrix.identity(space.dim), "random")


@pytest.mark.parametrize("space", [SQUARE, RECT, CUBE], ids=str)
def test_projection_laws(space, rng):
    builders = [zero_sum_space, common_interest_space, normalized_space, non_strategic_space, harmonic_space, potential_space]
    weights = [_random_weight(space, rng, c) for c in range(3)]
    for trial in range(100):
        if trial % 4 == 3:
            s = Subspace.from_spanning(space, random_matrix(rng, space.dim, 1 + trial % 5))
        else:
            s = builders[trial % len(builders)](space)
        ip = weights[trial % 3]
        x, y = random_game(space, rng), random_game(space, rng)
        px = project(ip, s, x)
        assert project(ip, s, px) == px
        assert inner(ip, px, y) == inner(ip, x, project(ip, s, y))
        assert span_equal(orth_complement(orth_complement(s, ip), ip), s)
