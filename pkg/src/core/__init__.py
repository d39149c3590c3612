"""Exact finite games: spaces, profiles, payoff vectors and the semi-tensor product."""

from src.core.game import (
    Game,
    GameSpace,
    StrategyProfile,
    from_table,
    index_to_profile,
    payoff,
    profile_to_index,
    profiles,
    to_table,
)
from src.core.linalg import RationalMatrix, stp

__all__ = [
    "Game",
    "GameSpace",
    "RationalMatrix",
    "StrategyProfile",
    "from_table",
    "index_to_profile",
    "payoff",
    "profile_to_index",
    "profiles",
    "stp",
    "to_table",
]
