"""Linear subspaces of payoff space and their algebra.

A Subspace holds an exact basis (dim x d, independent columns) and, lazily, an
annihilator A with A·basis = 0 and rank dim - d, which turns membership into a
single matrix product.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Optional

from src.core.errors import ShapeError
from src.core.game import Game, GameSpace
from src.core.linalg import RationalMatrix
from src.core.serialization import encode_rational

if TYPE_CHECKING:
    from src.inner_products.inner import InnerProduct


@dataclass(frozen=True, eq=False)
class Subspace:
    space: GameSpace
    basis: RationalMatrix
    label: str = ""
    constraints: Optional[RationalMatrix] = field(default=None, repr=False)

    def __post_init__(self):
        if self.basis.nrows != self.space.dim:
            raise ShapeError(f"basis has {self.basis.nrows} rows, {self.space} has dimension {self.space.dim}")
        if self.basis.rank() != self.basis.ncols:
            raise ShapeError("basis columns are not linearly independent")

    @classmethod
    def from_spanning(cls, space: GameSpace, vectors: RationalMatrix, label: str = "") -> "Subspace":
        """Span of the columns of an arbitrary matrix."""
        return cls(space, vectors.column_basis().primitive_columns(), label)

    @classmethod
    def from_constraints(cls, space: GameSpace, constraints: RationalMatrix, label: str = "") -> "Subspace":
        """{v : constraints·v = 0}."""
        if constraints.ncols != space.dim:
            raise ShapeError(f"constraints have {constraints.ncols} columns, expected {space.dim}")
        return cls(space, constraints.nullspace().primitive_columns(), label, constraints)

    @classmethod
    def zero(cls, space: GameSpace, label: str = "0") -> "Subspace":
        return cls(space, RationalMatrix.zeros(space.dim, 0), label)

    @classmethod
    def full(cls, space: GameSpace, label: str = "G") -> "Subspace":
        return cls(space, RationalMatrix.identity(space.dim), label)

    @property
    def d(self) -> int:
        return self.basis.ncols

    @cached_property
    def annihilator(self) -> RationalMatrix:
        if self.constraints is not None:
            return self.constraints
        if self.d == 0:
            return RationalMatrix.identity(self.space.dim)
        return self.basis.transpose().nullspace().transpose()

    def contains_columns(self, vectors: RationalMatrix) -> bool:
        """True iff every column of vectors lies in the span."""
        if vectors.nrows != self.space.dim:
            raise ShapeError(f"vectors have {vectors.nrows} rows, expected {self.space.dim}")
        return (self.annihilator @ vectors).is_zero()

    def basis_games(self) -> list[Game]:
        return [Game(self.space, col) for col in self.basis.columns()]

    def __repr__(self) -> str:
        return f"Subspace({self.label or '?'} in {self.space}, dim={self.d})"


def _same_space(a: Subspace, b: Subspace) -> None:
    a.space.require_same(b.space)


def is_member(s: Subspace, g: Game) -> bool:
    """Exact test g ∈ span(s) through the annihilator."""
    s.space.require_same(g.space)
    return s.contains_columns(g.as_column())


def intersect(a: Subspace, b: Subspace, label: str = "") -> Subspace:
    """a ∩ b from the null space of the stacked bases [A | -B]."""
    _same_space(a, b)
    label = label or f"{a.label}∩{b.label}"
    if a.d == 0 or b.d == 0:
        return Subspace.zero(a.space, label)
    kernel = a.basis.hstack(-b.basis).nullspace()
    coefficients = RationalMatrix.from_rows(kernel.rows()[: a.d], ncols=kernel.ncols)
    return Subspace.from_spanning(a.space, a.basis @ coefficients, label)


def subspace_sum(a: Subspace, b: Subspace, label: str = "") -> Subspace:
    """a + b as the column basis of [A | B]."""
    _same_space(a, b)
    return Subspace.from_spanning(a.space, a.basis.hstack(b.basis), label or f"{a.label}+{b.label}")


def orth_complement(a: Subspace, ip: "InnerProduct", label: str = "") -> Subspace:
    """{x : ⟨b, x⟩_Q = 0 for every basis column b}, the null space of Bᵀ·Q."""
    a.space.require_same(ip.space)
    gram_rows = a.basis.transpose() @ ip.q
    return Subspace(a.space, gram_rows.nullspace().primitive_columns(), label or f"{a.label}^⊥")


def contains(a: Subspace, b: Subspace) -> bool:
    """span(b) ⊆ span(a)."""
    _same_space(a, b)
    return a.contains_columns(b.basis)


def span_equal(a: Subspace, b: Subspace) -> bool:
    return a.d == b.d and contains(a, b)


def subspace_to_dict(s: Subspace) -> dict:
    """Debug export: space, label, dimension and basis columns."""
    return {
        "space": list(s.space.ks),
        "label": s.label,
        "dimension": s.d,
        "basis": [[encode_rational(x) for x in col] for col in s.basis.columns()],
    }
