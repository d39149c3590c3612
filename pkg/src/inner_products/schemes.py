"""The five direct-sum decomposition schemes of G[n;k1..kn].

    potential       P ⊕ N ⊕ H
    zero-sum        Z ⊕ C
    normalization   L ⊕ E
    zsep            (L∩C) ⊕ B ⊕ (L∩Z),  B = (Z+E)∩(C+E)
    symmetry        S ⊕ K,  K the orthogonal complement of S

Parts that depend on the inner product (P and K) are built with the one given.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Sequence

from src.core.errors import SchemeConstructionError, ShapeError, UnknownNameError
from src.core.game import GameSpace
from src.core.linalg import RationalMatrix
from src.inner_products.inner import InnerProduct, standard_ip
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
from src.subspaces.subspace import Subspace, contains, intersect, orth_complement, subspace_sum
from src.utils.logger import log


class SchemeName(str, Enum):
    POTENTIAL = "potential"
    ZERO_SUM = "zero-sum"
    NORMALIZATION = "normalization"
    ZSEP = "zsep"
    SYMMETRY = "symmetry"


def parse_scheme(name: str) -> SchemeName:
    """Resolve a scheme name; UnknownNameError lists the valid choices."""
    try:
        return SchemeName(name)
    except ValueError:
        choices = ", ".join(s.value for s in SchemeName)
        raise UnknownNameError(f"unknown scheme {name!r}; choose from {choices}") from None


@dataclass(frozen=True, eq=False)
class Scheme:
    """An ordered list of independent subspaces whose direct sum is the whole space."""

    name: SchemeName
    space: GameSpace
    parts: tuple[Subspace, ...]
    ip_name: str = "standard"

    def __post_init__(self):
        for part in self.parts:
            self.space.require_same(part.space)
        total = sum(part.d for part in self.parts)
        if total != self.space.dim:
            raise SchemeConstructionError(
                f"{self.name.value} parts have dimensions {self.dims}, summing to {total} instead of {self.space.dim}"
            )
        if self.stacked.rank() != self.space.dim:
            raise SchemeConstructionError(f"{self.name.value} parts {self.labels} do not form a direct sum")

    @classmethod
    def from_parts(
        cls, name: SchemeName, space: GameSpace, parts: Sequence[Subspace], ip_name: str = "standard"
    ) -> "Scheme":
        return cls(name, space, tuple(parts), ip_name)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(part.d for part in self.parts)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(part.label for part in self.parts)

    @cached_property
    def stacked(self) -> RationalMatrix:
        """[B_1 ... B_p], square and invertible for a valid scheme."""
        first, *rest = [part.basis for part in self.parts]
        return first.hstack(*rest)

    @cached_property
    def coordinate_map(self) -> RationalMatrix:
        """Maps a payoff vector to its stacked direct-sum coordinates."""
        try:
            return self.stacked.inverse()
        except ShapeError as e:
            raise SchemeConstructionError(f"{self.name.value} stacked basis is singular") from e

    def offsets(self) -> list[int]:
        """Start of each part's block in the stacked coordinates."""
        out, start = [], 0
        for d in self.dims:
            out.append(start)
            start += d
        return out


def _relabel(s: Subspace, label: str) -> Subspace:
    return Subspace(s.space, s.basis, label, s.constraints)


def _potential_parts(space: GameSpace, ip: InnerProduct) -> list[Subspace]:
    n_part = _relabel(non_strategic_space(space), "N")
    h_part = _relabel(harmonic_space(space), "H")
    p_part = orth_complement(subspace_sum(n_part, h_part), ip, "P")
    if not contains(potential_space(space), p_part):
        raise SchemeConstructionError(
            f"pure potential part built under {ip.name} is not inside the potential games of {space}"
        )
    return [p_part, n_part, h_part]


def build_scheme(name: SchemeName | str, space: GameSpace, ip: Optional[InnerProduct] = None) -> Scheme:
    """Assemble one of the five schemes on space.

    Args:
        name: Scheme name or SchemeName.
        space: The game space.
        ip: Inner product used for the parts defined as complements (P and K);
            the standard one when omitted.

    Returns:
        The validated Scheme.

    Raises:
        UnsupportedSpaceError: symmetry on a space with unequal strategy counts.
        SchemeConstructionError: the parts do not form a direct sum.
    """
    name = parse_scheme(name)
    ip = ip or standard_ip(space)
    space.require_same(ip.space)

    if name is SchemeName.POTENTIAL:
        parts = _potential_parts(space, ip)
    elif name is SchemeName.ZERO_SUM:
        parts = [zero_sum_space(space), common_interest_space(space)]
    elif name is SchemeName.NORMALIZATION:
        parts = [normalized_space(space), non_strategic_space(space)]
    elif name is SchemeName.ZSEP:
        l_space = normalized_space(space)
        parts = [
            intersect(l_space, common_interest_space(space), "L∩C"),
            zsep_space(space),
            intersect(l_space, zero_sum_space(space), "L∩Z"),
        ]
    else:
        s_space = symmetric_space(space)
        parts = [s_space, orth_complement(s_space, ip, "K")]

    scheme = Scheme(name, space, tuple(parts), ip.name)
    log.debug(f"built {name.value} scheme on {space} under {ip.name}: {dict(zip(scheme.labels, scheme.dims))}")
    return scheme
