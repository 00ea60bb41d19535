"""
Constraint ledger.

Pairs every printed inner constraint with the outer constraints that bound
it and reports the per-user slack of the pairing.
"""

import logging
from typing import List

from app.models.channel import Regime
from app.models.reports import LedgerEntry
from app.services.channel import require_regime
from app.services.regime_factory import get_regime_provider

logger = logging.getLogger(__name__)


def constraint_ledger(S: float, I: float, C: float, r: Regime) -> List[LedgerEntry]:
    """
    Per-user slack of every printed pairing of regime r.

    slack = (sum of outer rhs - inner rhs) / (coeff_p + coeff_c of the inner
    constraint); an outer label listed twice enters the sum twice.

    Raises:
        RegimeMismatchError: (S, I, C) outside the regime
        RegimeProviderError: Blue regime

    Example:
        >>> constraint_ledger(100, 10, 1, Regime.GREEN_I)[0].slack
        2.0
    """
    provider = get_regime_provider(r)
    require_regime(S, I, C, r)
    inner = provider.inner_region(S, I, C)
    outer = provider.outer_region(S, I, C)

    entries = []
    for inner_label, outer_labels in provider.ledger_pairs:
        constraint = inner.by_label(inner_label)
        total = sum(outer.rhs_of(label) for label in outer_labels)
        slack = (total - constraint.rhs) / sum(constraint.weights)
        entries.append(
            LedgerEntry(
                regime=provider.regime,
                inner_label=inner_label,
                outer_labels=tuple(outer_labels),
                slack=slack,
                constant=provider.ledger_constant,
            )
        )

    worst = max(entries, key=lambda e: e.slack)
    logger.debug(f"📊 {provider.regime.value} ledger: worst {worst.inner_label} slack={worst.slack:.4f}")
    return entries
