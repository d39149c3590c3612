"""Central registry of the game-class subspaces."""

from typing import Callable

from src.core.errors import UnknownNameError
from src.core.game import GameSpace
from src.subspaces.builders import (
    common_interest_space,
    harmonic_space,
    non_strategic_space,
    normalized_space,
    potential_space,
    symmetric_space,
    zero_sum_space,
    zsep_space,
)
from src.subspaces.classify import Classification, GameClass, classify
from src.subspaces.subspace import (
    Subspace,
    contains,
    intersect,
    is_member,
    orth_complement,
    span_equal,
    subspace_sum,
    subspace_to_dict,
)

# Basis builder for every game class
CLASS_SPACES: dict[GameClass, Callable[[GameSpace], Subspace]] = {
    GameClass.ZERO_SUM: zero_sum_space,
    GameClass.COMMON_INTEREST: common_interest_space,
    GameClass.NORMALIZED: normalized_space,
    GameClass.NON_STRATEGIC: non_strategic_space,
    GameClass.HARMONIC: harmonic_space,
    GameClass.SYMMETRIC: symmetric_space,
    GameClass.POTENTIAL: potential_space,
}


def parse_class(name: str) -> GameClass:
    """Resolve a game class name; UnknownNameError lists the valid choices."""
    try:
        return GameClass(name)
    except ValueError:
        choices = ", ".join(c.value for c in GameClass)
        raise UnknownNameError(f"unknown game class {name!r}; choose from {choices}") from None


def class_space(tag: GameClass, space: GameSpace) -> Subspace:
    """Build the subspace of the given class on space."""
    return CLASS_SPACES[tag](space)


__all__ = [
    "CLASS_SPACES",
    "Classification",
    "GameClass",
    "Subspace",
    "class_space",
    "classify",
    "common_interest_space",
    "contains",
    "harmonic_space",
    "intersect",
    "is_member",
    "non_strategic_space",
    "normalized_space",
    "orth_complement",
    "parse_class",
    "potential_space",
    "span_equal",
    "subspace_sum",
    "subspace_to_dict",
    "symmetric_space",
    "zero_sum_space",
    "zsep_space",
]
