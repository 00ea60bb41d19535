"""
Report records produced by the certification sweeps.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from app.models.channel import Regime


@dataclass(frozen=True)
class GapReport:
    """Gap certification outcome at one (S, alpha, beta) grid point."""
    S: float
    alpha: float
    beta: float
    regime: Regime
    evaluated_as: Regime
    gap: float
    budget: float
    certified: bool
    binding_vertex: Optional[Tuple[float, float]]
    external: bool = False

    @property
    def snr_db(self) -> float:
        return 10.0 * math.log10(self.S)

    @property
    def counts_as_failure(self) -> bool:
        """External (Blue) points never fail a sweep."""
        return not self.external and not self.certified


@dataclass(frozen=True)
class LedgerEntry:
    """One printed inner/outer pairing with its per-user slack."""
    regime: Regime
    inner_label: str
    outer_labels: Tuple[str, ...]
    slack: float
    constant: float

    @property
    def within_constant(self) -> bool:
        return self.slack <= self.constant + 1e-9
