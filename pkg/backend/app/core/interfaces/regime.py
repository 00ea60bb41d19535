"""
Abstract Regime Provider Interface.
Defines the contract every regime of the symmetric channel implements.
"""

from abc import ABC, abstractmethod
from typing import Tuple

from app.models.channel import Regime, Scheme
from app.models.region import RatePolytope
from app.models.signaling import PowerSplit

# (inner label, outer labels); an outer label repeated k times enters the sum k times.
LedgerPair = Tuple[str, Tuple[str, ...]]


class RegimeProvider(ABC):
    """
    Abstract base class for the certified regimes (GreenI, GreenII, Red, Yellow).

    A provider bundles what the gap argument of one regime needs: the
    printed achievable region, the relaxed outer region, the power split
    that produces the achievable region and the inner/outer pairings used
    to bound the gap constraint by constraint.
    """

    regime: Regime
    scheme: Scheme
    ledger_constant: float

    @abstractmethod
    def inner_region(self, S: float, I: float, C: float) -> RatePolytope:
        """
        Achievable region of the regime, as printed.

        Args:
            S: Direct-link SNR (linear)
            I: Interference gain (linear)
            C: Cooperation-link gain (linear)

        Returns:
            RatePolytope whose labels start with "low"

        Example:
            >>> provider = get_regime_provider(Regime.YELLOW)
            >>> provider.inner_region(100, 10, 500).labels[0]
            'lowYellowA'
        """
        pass

    @abstractmethod
    def outer_region(self, S: float, I: float, C: float) -> RatePolytope:
        """
        Relaxed outer region of the regime, as printed.

        Every constraint is a loosening of the symmetric outer bound that
        holds under the regime's validity conditions. Labels start with "out".
        """
        pass

    @abstractmethod
    def power_split(self, S: float, I: float, C: float) -> PowerSplit:
        """Power shares that achieve inner_region under `scheme`."""
        pass

    @property
    @abstractmethod
    def ledger_pairs(self) -> Tuple[LedgerPair, ...]:
        """Inner constraint labels paired with the outer labels that bound them."""
        pass
