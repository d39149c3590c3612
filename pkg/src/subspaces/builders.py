"""Exact bases for every game-class subspace of G[n;k1..kn].

Each builder works from the defining equations of its class: either the
constraints are written down and their null space taken, or the spanning
vectors are written down directly. Bases are scaled to coprime integers.
"""

from fractions import Fraction
from itertools import permutations

from src.config.settings import settings
from src.core.errors import UnsupportedSpaceError
from src.core.game import GameSpace, opponent_profiles, profiles, with_strategy
from src.core.linalg import RationalMatrix
from src.subspaces.subspace import Subspace, intersect, subspace_sum
from src.utils.logger import log


def _unit_rows(space: GameSpace, groups: list[list[int]]) -> RationalMatrix:
    """One row per group with a 1 in each listed coordinate."""
    rows = []
    for coords in groups:
        row = [0] * space.dim
        for c in coords:
            row[c] = 1
        rows.append(row)
    return RationalMatrix.from_rows(rows, ncols=space.dim)


def _own_strategy_groups(space: GameSpace) -> list[list[int]]:
    """For every (i, s_{-i}): the k_i coordinates c_i(x_i, s_{-i}), x_i ∈ S_i."""
    groups = []
    for i in range(1, space.n + 1):
        for s_minus in opponent_profiles(space, i):
            groups.append([space.coordinate(i, with_strategy(s_minus, i, x)) for x in range(1, space.ks[i - 1] + 1)])
    return groups


def zero_sum_space(space: GameSpace) -> Subspace:
    """Σ_i c_i(s) = 0 for every profile s."""
    groups = [[space.coordinate(i, s) for i in range(1, space.n + 1)] for s in profiles(space)]
    z = Subspace.from_constraints(space, _unit_rows(space, groups), "Z")
    log.debug(f"zero-sum space of {space}: dim {z.d}")
    return z


def common_interest_space(space: GameSpace) -> Subspace:
    """{[w, w, ..., w] : w ∈ R^k}."""
    groups = [[space.coordinate(i, s) for i in range(1, space.n + 1)] for s in profiles(space)]
    return Subspace(space, _unit_rows(space, groups).transpose(), "C")


def normalized_space(space: GameSpace) -> Subspace:
    """Σ_{x_i} c_i(x_i, s_{-i}) = 0 for every player and opponent profile."""
    l_space = Subspace.from_constraints(space, _unit_rows(space, _own_strategy_groups(space)), "L")
    log.debug(f"normalized space of {space}: dim {l_space.d}")
    return l_space


def non_strategic_space(space: GameSpace) -> Subspace:
    """Each c_i constant in player i's own strategy."""
    return Subspace(space, _unit_rows(space, _own_strategy_groups(space)).transpose(), "E")


def harmonic_space(space: GameSpace) -> Subspace:
    """Games that are both zero-sum and normalized."""
    return intersect(zero_sum_space(space), normalized_space(space), "H")


def _check_symmetric_space(space: GameSpace) -> None:
    if not space.equal_strategies:
        raise UnsupportedSpaceError(f"symmetric games need equal strategy counts, {space} has {list(space.ks)}")
    if space.n > settings.SYMMETRIC_MAX_PLAYERS:
        raise UnsupportedSpaceError(
            f"symmetric construction enumerates n! permutations; n={space.n} exceeds {settings.SYMMETRIC_MAX_PLAYERS}"
        )


def permutation_image(space: GameSpace, sigma: tuple[int, ...], player: int, profile: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Where the action of sigma sends coordinate (player, profile).

    The action is (σ·V)_i(s) = V_{σ(i)}(s_{σ⁻¹(1)}, ..., s_{σ⁻¹(n)}); sigma is
    0-based, sigma[i] = σ(i). Returns the coordinate that receives
    V_player(profile).
    """
    inverse = [0] * space.n
    for i, j in enumerate(sigma):
        inverse[j] = i
    target_player = inverse[player - 1] + 1
    target_profile = tuple(profile[sigma[r]] for r in range(space.n))
    return target_player, target_profile


def symmetric_space(space: GameSpace) -> Subspace:
    """Fixed subspace of the player-permutation action, via the Reynolds operator.

    Every standard basis vector is averaged over all n! permutations; the
    distinct averages span the image of the operator.
    """
    _check_symmetric_space(space)
    group = list(permutations(range(space.n)))
    weight = Fraction(1, len(group))
    averages: dict[tuple, list[Fraction]] = {}
    for player in range(1, space.n + 1):
        for profile in profiles(space):
            column = [Fraction(0)] * space.dim
            for sigma in group:
                i, s = permutation_image(space, sigma, player, profile)
                column[space.coordinate(i, s)] += weight
            averages.setdefault(tuple(column), column)
    vectors = RationalMatrix.from_columns(list(averages.values()), space.dim)
    s_space = Subspace.from_spanning(space, vectors, "S")
    log.debug(f"symmetric space of {space}: dim {s_space.d} from {len(group)} permutations")
    return s_space


def potential_space(space: GameSpace) -> Subspace:
    """All potential games, as the V-part of the solutions (V, P) of

        c_i(x_i, s_{-i}) - c_i(1, s_{-i}) = P(x_i, s_{-i}) - P(1, s_{-i}).
    """
    k, dim = space.k, space.dim
    rows = []
    for i in range(1, space.n + 1):
        for s_minus in opponent_profiles(space, i):
            base = with_strategy(s_minus, i, 1)
            for x in range(2, space.ks[i - 1] + 1):
                s = with_strategy(s_minus, i, x)
                row = [0] * (dim + k)
                row[space.coordinate(i, s)] += 1
                row[space.coordinate(i, base)] -= 1
                row[dim + space.coordinate(1, s)] -= 1
                row[dim + space.coordinate(1, base)] += 1
                rows.append(row)
    solutions = RationalMatrix.from_rows(rows, ncols=dim + k).nullspace()
    v_part = RationalMatrix.from_rows(solutions.rows()[:dim], ncols=solutions.ncols)
    p_space = Subspace.from_spanning(space, v_part, "potential")
    log.debug(f"potential space of {space}: dim {p_space.d}")
    return p_space


def zsep_space(space: GameSpace) -> Subspace:
    """B = (Z + E) ∩ (C + E), the zero-sum equivalent potential games."""
    e = non_strategic_space(space)
    return intersect(
        subspace_sum(zero_sum_space(space), e),
        subspace_sum(common_interest_space(space), e),
        "B",
    )
