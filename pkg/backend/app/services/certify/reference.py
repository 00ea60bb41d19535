"""
Comparison of the symmetric outer bound with the reference regions.

Weak cooperation (C <= min{S, I(1+I)/(1+S)}) is compared with the classical
interference channel; strong cooperation (C >= max{S, I}) with the non-causal
cognitive channel. Points in both sets, such as C = 0 with no gains, use the
classical channel.
"""

import logging
from dataclasses import dataclass

from app.core.exceptions import PreconditionError
from app.models.channel import ReferenceKind, SymmetricParams
from app.services.channel import green_split_level
from app.services.outer_bounds import outer_reference, outer_symmetric
from app.services.polytope import gap_to_within

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReferenceComparison:
    """Gaps between outer_symmetric and a reference region, both directions."""
    S: float
    I: float
    C: float
    kind: ReferenceKind
    symmetric_into_reference: float
    reference_into_symmetric: float

    @property
    def max_gap(self) -> float:
        return max(self.symmetric_into_reference, self.reference_into_symmetric)


def reference_kind(S: float, I: float, C: float) -> ReferenceKind:
    """
    Reference region whose validity set contains (S, I, C).

    The classical set is checked first, so it wins where both hold.

    Raises:
        PreconditionError: outside both validity sets
    """
    if C <= min(S, green_split_level(S, I)):
        return ReferenceKind.CLASSICAL_IC
    if C >= max(S, I):
        return ReferenceKind.NON_CAUSAL_CIC
    raise PreconditionError(
        f"(S={S:g}, I={I:g}, C={C:g}) satisfies neither C >= max(S, I) nor C <= min(S, I(1+I)/(1+S))"
    )


def reference_comparison_gains(S: float, I: float, C: float) -> ReferenceComparison:
    """
    Compare at absolute gains.

    Example:
        >>> reference_comparison_gains(0, 0, 0).kind
        <ReferenceKind.CLASSICAL_IC: 'ClassicalIC'>
    """
    kind = reference_kind(S, I, C)
    symmetric = outer_symmetric(S, I, C)
    reference = outer_reference(S, I, C, kind)
    result = ReferenceComparison(
        S=S,
        I=I,
        C=C,
        kind=kind,
        symmetric_into_reference=gap_to_within(symmetric, reference),
        reference_into_symmetric=gap_to_within(reference, symmetric),
    )
    logger.debug(
        f"📊 {kind.value}: sym->ref {result.symmetric_into_reference:.4f}, "
        f"ref->sym {result.reference_into_symmetric:.4f}"
    )
    return result


def reference_comparison(S: float, alpha: float, beta: float) -> ReferenceComparison:
    """Compare at the symmetric point (S, S^alpha, S^beta)."""
    params = SymmetricParams(S=S, alpha=alpha, beta=beta)
    return reference_comparison_gains(S, params.inr, params.coop)
