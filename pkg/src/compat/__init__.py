"""Compatibility of decomposition schemes with weighted inner products."""

from src.compat.checker import (
    Agreement,
    CompatReport,
    Direction,
    TheoremReport,
    Violation,
    compat_to_dict,
    cross_witness,
    is_compatible,
    scheme_cross_witness,
    theorem_check,
    theorem_to_dict,
)

__all__ = [
    "Agreement",
    "CompatReport",
    "Direction",
    "TheoremReport",
    "Violation",
    "compat_to_dict",
    "cross_witness",
    "is_compatible",
    "scheme_cross_witness",
    "theorem_check",
    "theorem_to_dict",
]
