"""Splitting a game into its scheme components."""

from dataclasses import dataclass
from functools import lru_cache

from src.core.errors import SchemeConstructionError
from src.core.game import Game
from src.core.linalg import RationalMatrix
from src.core.serialization import game_to_dict, encode_rational
from src.inner_products.inner import InnerProduct, cross_gram, project, squared_norm
from src.inner_products.schemes import Scheme


@dataclass(frozen=True)
class Decomposition:
    scheme: Scheme
    ip: InnerProduct
    game: Game
    components: tuple[Game, ...]
    orthogonal: bool

    def component(self, label: str) -> Game:
        """The component belonging to the part with this label."""
        return self.components[self.scheme.labels.index(label)]


@lru_cache(maxsize=128)
def verify_orthogonality(scheme: Scheme, ip: InnerProduct) -> bool:
    """True iff basis columns of distinct parts are pairwise ip-orthogonal."""
    scheme.space.require_same(ip.space)
    parts = scheme.parts
    return all(
        cross_gram(ip, parts[a], parts[b]).is_zero()
        for a in range(len(parts))
        for b in range(a + 1, len(parts))
    )


def decompose(scheme: Scheme, ip: InnerProduct, g: Game, check_projection: bool = True) -> Decomposition:
    """Direct-sum coordinates of g, one component per part.

    Solves [B_1 ... B_p]·c = v, which is defined whether or not the parts are
    ip-orthogonal. When they are, each component must equal the orthogonal
    projection onto its part; a mismatch is an internal error.
    """
    scheme.space.require_same(g.space)
    scheme.space.require_same(ip.space)
    coordinates = (scheme.coordinate_map @ g.as_column()).flat()

    components = []
    for part, start in zip(scheme.parts, scheme.offsets()):
        c = RationalMatrix.column_vector(coordinates[start : start + part.d])
        components.append(Game.from_column(g.space, part.basis @ c))

    total = Game.zero(g.space)
    for component in components:
        total = total + component
    if total != g:
        raise SchemeConstructionError(f"{scheme.name.value} components do not sum back to the game")

    orthogonal = verify_orthogonality(scheme, ip)
    if orthogonal and check_projection:
        for part, component in zip(scheme.parts, components):
            if project(ip, part, g) != component:
                raise SchemeConstructionError(
                    f"{part.label} component differs from the {ip.name} projection on an orthogonal scheme"
                )
    return Decomposition(scheme, ip, g, tuple(components), orthogonal)


def decomposition_to_dict(dec: Decomposition) -> dict:
    """JSON-ready form: labels, component games, squared norms and the orthogonality flag."""
    return {
        "scheme": dec.scheme.name.value,
        "inner": dec.ip.name,
        "labels": list(dec.scheme.labels),
        "components": [game_to_dict(c) for c in dec.components],
        "squared_norms": [encode_rational(squared_norm(dec.ip, c)) for c in dec.components],
        "orthogonal": dec.orthogonal,
    }
