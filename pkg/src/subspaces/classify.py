"""Definitional class predicates for a single game.

These read the class definitions directly off the payoffs; they are kept
independent of the basis builders so the two can be checked against each other.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Optional

from src.config.settings import settings
from src.core.game import Game, GameSpace, opponent_profiles, payoff, profile_to_index, profiles, with_strategy
from src.core.linalg import RationalMatrix
from src.subspaces.builders import permutation_image


class GameClass(str, Enum):
    ZERO_SUM = "zero-sum"
    COMMON_INTEREST = "common-interest"
    NORMALIZED = "normalized"
    NON_STRATEGIC = "non-strategic"
    HARMONIC = "harmonic"
    SYMMETRIC = "symmetric"
    POTENTIAL = "potential"


@dataclass(frozen=True)
class Classification:
    classes: frozenset[GameClass]
    potential: Optional[tuple[Fraction, ...]] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __contains__(self, tag: GameClass) -> bool:
        return tag in self.classes


def is_zero_sum(g: Game) -> bool:
    """Payoffs sum to zero at every profile."""
    return all(sum(payoff(g, i, s) for i in range(1, g.space.n + 1)) == 0 for s in profiles(g.space))


def is_common_interest(g: Game) -> bool:
    """Every player gets the same payoff at every profile."""
    return all(len({payoff(g, i, s) for i in range(1, g.space.n + 1)}) == 1 for s in profiles(g.space))


def _own_strategy_payoffs(g: Game):
    space = g.space
    for i in range(1, space.n + 1):
        for s_minus in opponent_profiles(space, i):
            yield [payoff(g, i, with_strategy(s_minus, i, x)) for x in range(1, space.ks[i - 1] + 1)]


def is_normalized(g: Game) -> bool:
    """Each player's payoffs sum to zero over their own strategies."""
    return all(sum(values) == 0 for values in _own_strategy_payoffs(g))


def is_non_strategic(g: Game) -> bool:
    """No player's payoff depends on their own strategy."""
    return all(len(set(values)) == 1 for values in _own_strategy_payoffs(g))


def is_harmonic(g: Game) -> bool:
    return is_zero_sum(g) and is_normalized(g)


def is_symmetric(g: Game) -> bool:
    """c_i(s) = c_{σ(i)}(s_{σ⁻¹(1)}, ..., s_{σ⁻¹(n)}) for every permutation σ."""
    space = g.space
    for sigma in permutations(range(space.n)):
        for i in range(1, space.n + 1):
            for s in profiles(space):
                j, t = permutation_image(space, sigma, i, s)
                if payoff(g, i, s) != payoff(g, j, t):
                    return False
    return True


def potential_function(g: Game) -> Optional[tuple[Fraction, ...]]:
    """A potential P (indexed by profile) with P(x_i, s_{-i}) - P(1, s_{-i}) equal
    to c_i(x_i, s_{-i}) - c_i(1, s_{-i}) for every player, or None if none exists.

    Any exact solution works; free variables are set to zero.
    """
    space = g.space
    rows, rhs = [], []
    for i in range(1, space.n + 1):
        for s_minus in opponent_profiles(space, i):
            base = with_strategy(s_minus, i, 1)
            for x in range(2, space.ks[i - 1] + 1):
                s = with_strategy(s_minus, i, x)
                row = [0] * space.k
                row[profile_to_index(space, s) - 1] += 1
                row[profile_to_index(space, base) - 1] -= 1
                rows.append(row)
                rhs.append(payoff(g, i, s) - payoff(g, i, base))
    solution = RationalMatrix.from_rows(rows, ncols=space.k).solve(RationalMatrix.column_vector(rhs))
    return None if solution is None else solution.flat()


def symmetric_applicable(space: GameSpace) -> Optional[str]:
    """Reason the symmetric predicate cannot be evaluated, or None."""
    if not space.equal_strategies:
        return f"symmetric check skipped: unequal strategy counts {list(space.ks)}"
    if space.n > settings.SYMMETRIC_MAX_PLAYERS:
        return f"symmetric check skipped: {space.n} players exceeds {settings.SYMMETRIC_MAX_PLAYERS}"
    return None


def classify(g: Game) -> Classification:
    classes = set()
    notes = []
    if is_zero_sum(g):
        classes.add(GameClass.ZERO_SUM)
    if is_common_interest(g):
        classes.add(GameClass.COMMON_INTEREST)
    if is_normalized(g):
        classes.add(GameClass.NORMALIZED)
    if is_non_strategic(g):
        classes.add(GameClass.NON_STRATEGIC)
    if GameClass.ZERO_SUM in classes and GameClass.NORMALIZED in classes:
        classes.add(GameClass.HARMONIC)
    reason = symmetric_applicable(g.space)
    if reason:
        notes.append(reason)
    elif is_symmetric(g):
        classes.add(GameClass.SYMMETRIC)
    witness = potential_function(g)
    if witness is not None:
        classes.add(GameClass.POTENTIAL)
    return Classification(frozenset(classes), witness, tuple(notes))
