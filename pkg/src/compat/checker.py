"""Compatibility of a decomposition scheme with a weight matrix Q.

A scheme and Q are compatible when every part M is closed under v ↦ Qv and
v ↦ Q⁻¹v. By linearity it is enough to test the basis columns of each part,
so the decision below is exact and involves no sampling. theorem_check then
compares the standard and weighted orthogonal decompositions on seeded random
games to confirm that compatibility holds exactly when both inner products
induce the same decomposition.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from src.config.settings import settings
from src.core.errors import InvalidParameterError
from src.core.game import Game, GameSpace
from src.core.linalg import RationalMatrix
from src.core.sampling import make_rng, random_game
from src.core.serialization import encode_rational, game_to_dict
from src.inner_products.decompose import verify_orthogonality
from src.inner_products.inner import InnerProduct, cross_gram, projector, standard_ip
from src.inner_products.schemes import Scheme, SchemeName, build_scheme
from src.subspaces.subspace import Subspace
from src.utils.logger import log


class Direction(str, Enum):
    Q = "Q"
    Q_INV = "Q^-1"


@dataclass(frozen=True)
class Violation:
    part: int
    column: int
    direction: Direction


@dataclass(frozen=True)
class CompatReport:
    scheme: str
    weight: str
    violations: tuple[Violation, ...]
    parts: int

    @property
    def compatible(self) -> bool:
        return not self.violations

    @property
    def compatible_leading(self) -> bool:
        """The reading that only asks parts 1..p-1 to be closed."""
        return all(v.part >= self.parts for v in self.violations)

    def violated_parts(self) -> set[int]:
        """1-based indices of the parts with at least one violation."""
        return {v.part for v in self.violations}


def _columns_outside(part: Subspace, vectors: RationalMatrix) -> list[int]:
    residual = part.annihilator @ vectors
    return [j for j, col in enumerate(residual.columns()) if any(x != 0 for x in col)]


def is_compatible(scheme: Scheme, ip: InnerProduct) -> CompatReport:
    """Check Q·b and Q⁻¹·b against every part for every basis column b.

    Args:
        scheme: The decomposition scheme.
        ip: The weighted inner product supplying Q.

    Returns:
        CompatReport listing each (part, column, direction) that leaves its part.
    """
    scheme.space.require_same(ip.space)
    violations = []
    for p, part in enumerate(scheme.parts, start=1):
        for direction, weight in ((Direction.Q, ip.q), (Direction.Q_INV, ip.q_inv)):
            for j in _columns_outside(part, weight @ part.basis):
                violations.append(Violation(p, j + 1, direction))
    report = CompatReport(scheme.name.value, ip.name, tuple(violations), len(scheme.parts))
    log.info(
        f"{scheme.name.value} on {scheme.space} with {ip.name}: "
        f"{'compatible' if report.compatible else f'{len(violations)} violations'}"
    )
    return report


def cross_witness(a: Subspace, b: Subspace, ip: InnerProduct) -> Optional[tuple[int, int, Fraction]]:
    """First basis pair (i, j), 1-based, with ⟨a_i, b_j⟩_Q ≠ 0, scanning all pairs."""
    gram = cross_gram(ip, a, b)
    for i, row in enumerate(gram.rows(), start=1):
        for j, value in enumerate(row, start=1):
            if value != 0:
                return i, j, value
    return None


@dataclass(frozen=True)
class Agreement:
    trials: int
    seed: int
    all_equal: bool
    witness: Optional[Game] = None
    witness_trial: Optional[int] = None


@dataclass(frozen=True)
class TheoremReport:
    scheme: Scheme
    compat: CompatReport
    orthogonal_standard: bool
    orthogonal_weighted: bool
    agreement: Agreement

    @property
    def premise(self) -> bool:
        """The scheme is orthogonal under at least one of the two inner products."""
        return self.orthogonal_standard or self.orthogonal_weighted

    @property
    def common_decomposition(self) -> bool:
        return self.orthogonal_standard and self.orthogonal_weighted and self.agreement.all_equal

    @property
    def holds(self) -> bool:
        if not self.premise:
            return True
        return self.compat.compatible == self.common_decomposition


def _projections_agree(projectors: list[tuple[RationalMatrix, RationalMatrix]], g: Game) -> bool:
    v = g.as_column()
    return all(standard @ v == weighted @ v for standard, weighted in projectors)


def theorem_check(
    scheme_name: SchemeName | str,
    space: GameSpace,
    ip: InnerProduct,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> TheoremReport:
    """Decide compatibility and compare standard and weighted projections on random games.

    Args:
        scheme_name: One of the five scheme names, built under the standard inner product.
        space: The game space G[n;k1..kn].
        ip: The weighted inner product under test.
        trials: Number of seeded random games; settings.DEFAULT_TRIALS when omitted.
        seed: RNG seed; settings.DEFAULT_SEED when omitted.

    Returns:
        TheoremReport with the built scheme, the compatibility verdict, orthogonality
        under both inner products and the agreement record.
    """
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    if trials < 0:
        raise InvalidParameterError(f"trials must be non-negative, got {trials}")
    seed = settings.DEFAULT_SEED if seed is None else seed
    standard = standard_ip(space)
    scheme = build_scheme(scheme_name, space, standard)

    compat = is_compatible(scheme, ip)
    orthogonal_standard = verify_orthogonality(scheme, standard)
    orthogonal_weighted = verify_orthogonality(scheme, ip)

    rng = make_rng(seed)
    games = [random_game(space, rng) for _ in range(trials)]
    projectors = [(projector(standard, part), projector(ip, part)) for part in scheme.parts]
    agreed = [_projections_agree(projectors, g) for g in games]

    witness_trial = next((t for t, ok in enumerate(agreed) if not ok), None)
    agreement = Agreement(
        trials=trials,
        seed=seed,
        all_equal=witness_trial is None,
        witness=None if witness_trial is None else games[witness_trial],
        witness_trial=witness_trial,
    )
    report = TheoremReport(scheme, compat, orthogonal_standard, orthogonal_weighted, agreement)
    if not report.premise:
        log.warning(f"{scheme.name.value} is orthogonal under neither inner product; equivalence not applicable")
    log.info(
        f"theorem check {scheme.name.value} on {space} with {ip.name}: "
        f"compatible={compat.compatible}, common decomposition={report.common_decomposition}, holds={report.holds}"
    )
    return report


def compat_to_dict(report: CompatReport) -> dict:
    """JSON-ready form of a compatibility report."""
    return {
        "scheme": report.scheme,
        "weight": report.weight,
        "compatible": report.compatible,
        "compatible_leading": report.compatible_leading,
        "violations": [
            {"part": v.part, "column": v.column, "direction": v.direction.value} for v in report.violations
        ],
    }


def theorem_to_dict(report: TheoremReport) -> dict:
    """compat_to_dict plus orthogonality, premise, verdict and agreement record."""
    agreement = report.agreement
    data = compat_to_dict(report.compat)
    data.update(
        {
            "orthogonal_standard": report.orthogonal_standard,
            "orthogonal_weighted": report.orthogonal_weighted,
            "premise": report.premise,
            "theorem_holds": report.holds,
            "agreement": {
                "trials": agreement.trials,
                "seed": agreement.seed,
                "all_equal": agreement.all_equal,
                "witness": None if agreement.witness is None else game_to_dict(agreement.witness),
                "witness_trial": agreement.witness_trial,
            },
        }
    )
    return data


def scheme_cross_witness(scheme: Scheme, ip: InnerProduct) -> Optional[dict]:
    """The first pair of parts with a non-orthogonal basis pair under ip, as a dict."""
    for a in range(len(scheme.parts)):
        for b in range(a + 1, len(scheme.parts)):
            witness = cross_witness(scheme.parts[a], scheme.parts[b], ip)
            if witness is not None:
                i, j, value = witness
                return {
                    "parts": [a + 1, b + 1],
                    "left_column": i,
                    "right_column": j,
                    "inner": encode_rational(value),
                }
    return None
