"""Seeded random rationals, games and matrices."""

from fractions import Fraction
from typing import Optional

import numpy as np

from src.config.settings import settings
from src.core.game import Game, GameSpace
from src.core.linalg import RationalMatrix


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """numpy Generator seeded with seed, or settings.DEFAULT_SEED."""
    return np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)


def random_rational(rng: np.random.Generator) -> Fraction:
    """p/q with |p| <= RANDOM_NUMERATOR_BOUND and 1 <= q <= RANDOM_DENOMINATOR_BOUND."""
    bound = settings.RANDOM_NUMERATOR_BOUND
    numerator = int(rng.integers(-bound, bound + 1))
    denominator = int(rng.integers(1, settings.RANDOM_DENOMINATOR_BOUND + 1))
    return Fraction(numerator, denominator)


def random_rationals(rng: np.random.Generator, count: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(count)]


def random_game(space: GameSpace, rng: np.random.Generator) -> Game:
    """Game with independent random rational payoffs."""
    return Game(space, random_rationals(rng, space.dim))


def random_combination(basis: RationalMatrix, rng: np.random.Generator) -> RationalMatrix:
    """basis · c for a random rational coefficient column c."""
    coefficients = RationalMatrix.column_vector(random_rationals(rng, basis.ncols))
    return basis @ coefficients


def random_matrix(rng: np.random.Generator, m: int, n: int) -> RationalMatrix:
    return RationalMatrix.from_rows([random_rationals(rng, n) for _ in range(m)], ncols=n)


def random_invertible(rng: np.random.Generator, n: int) -> RationalMatrix:
    """Random n×n matrix, redrawn until it has full rank."""
    while True:
        m = random_matrix(rng, n, n)
        if m.rank() == n:
            return m
