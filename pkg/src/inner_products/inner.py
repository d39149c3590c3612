"""Inner products ⟨X, Y⟩_Q = XᵀQY on payoff space and orthogonal projection."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path

from src.core.errors import NotPositiveDefiniteError, SchemeConstructionError, ShapeError, UnknownNameError
from src.core.game import Game, GameSpace
from src.core.linalg import RationalMatrix, ldl_pivots
from src.core.serialization import WeightDocument, parse_json, read_text, weight_document
from src.subspaces.subspace import Subspace


@dataclass(frozen=True, eq=False)
class InnerProduct:
    """A symmetric positive definite weight matrix Q on G[n;k1..kn]."""

    space: GameSpace
    q: RationalMatrix
    name: str = "custom"

    def __post_init__(self):
        dim = self.space.dim
        if self.q.shape != (dim, dim):
            raise ShapeError(f"weight matrix for {self.space} must be {dim}x{dim}, got {self.q.shape}")
        if not self.q.is_symmetric():
            raise NotPositiveDefiniteError("weight matrix is not symmetric")
        for index, pivot in enumerate(ldl_pivots(self.q), start=1):
            if pivot <= 0:
                raise NotPositiveDefiniteError(
                    f"weight matrix is not positive definite: LDLᵀ pivot {index} is {pivot}", pivot=index
                )

    @cached_property
    def q_inv(self) -> RationalMatrix:
        return self.q.inverse()

    @cached_property
    def is_scalar(self) -> bool:
        """Q = c·I for some c > 0."""
        rows = self.q.rows()
        c = rows[0][0]
        return all(x == (c if i == j else 0) for i, row in enumerate(rows) for j, x in enumerate(row))

    def __repr__(self) -> str:
        return f"InnerProduct({self.name} on {self.space})"


def standard_ip(space: GameSpace) -> InnerProduct:
    """The Euclidean inner product, Q = I."""
    return InnerProduct(space, RationalMatrix.identity(space.dim), "standard")


def candogan_ip(space: GameSpace) -> InnerProduct:
    """Q = diag(k_1 repeated k times, ..., k_n repeated k times)."""
    weights = [k_i for k_i in space.ks for _ in range(space.k)]
    return InnerProduct(space, RationalMatrix.diagonal(weights), "candogan")


PRESETS = {
    "standard": standard_ip,
    "candogan": candogan_ip,
}


def weight_from_document(space: GameSpace, doc: WeightDocument, name: str = "custom") -> InnerProduct:
    """Inner product for a validated weight document (preset or explicit q)."""
    if doc.preset is not None:
        return PRESETS[doc.preset](space)
    return InnerProduct(space, RationalMatrix.from_rows(doc.q), name)


def weight_from_descriptor(space: GameSpace, descriptor: str) -> InnerProduct:
    """Resolve "standard", "candogan" or "file:PATH" (weight JSON)."""
    if descriptor in PRESETS:
        return PRESETS[descriptor](space)
    if descriptor.startswith("file:"):
        path = Path(descriptor[len("file:"):])
        doc = weight_document(parse_json(read_text(path)))
        return weight_from_document(space, doc, name=f"file:{path}")
    raise UnknownNameError(f"unknown inner product {descriptor!r}; use standard, candogan or file:PATH")


def inner(ip: InnerProduct, x: Game, y: Game) -> Fraction:
    """⟨x, y⟩_Q = xᵀQy.

    Args:
        ip: Inner product on the games' space.
        x: Left game.
        y: Right game.

    Returns:
        The exact rational inner product.
    """
    ip.space.require_same(x.space)
    ip.space.require_same(y.space)
    return (x.as_column().transpose() @ ip.q @ y.as_column()).entry(0, 0)


def squared_norm(ip: InnerProduct, x: Game) -> Fraction:
    """⟨x, x⟩_Q."""
    return inner(ip, x, x)


def cross_gram(ip: InnerProduct, a: Subspace, b: Subspace) -> RationalMatrix:
    """Matrix of ⟨a_i, b_j⟩_Q over basis columns."""
    return a.basis.transpose() @ ip.q @ b.basis


@lru_cache(maxsize=256)
def projector(ip: InnerProduct, s: Subspace) -> RationalMatrix:
    """B(BᵀQB)⁻¹BᵀQ, the ip-orthogonal projector onto span(B)."""
    ip.space.require_same(s.space)
    if s.d == 0:
        return RationalMatrix.zeros(s.space.dim, s.space.dim)
    weighted = s.basis.transpose() @ ip.q
    try:
        gram_inverse = (weighted @ s.basis).inverse()
    except ShapeError as e:
        raise SchemeConstructionError(f"singular Gram matrix for {s!r} under {ip!r}") from e
    return s.basis @ gram_inverse @ weighted


def project(ip: InnerProduct, s: Subspace, g: Game) -> Game:
    """Orthogonal projection of g onto s under ip.

    Args:
        ip: Inner product defining orthogonality.
        s: Target subspace.
        g: Game to project.

    Returns:
        The unique member p of s with g - p ip-orthogonal to s.
    """
    ip.space.require_same(g.space)
    return Game.from_column(g.space, projector(ip, s) @ g.as_column())
