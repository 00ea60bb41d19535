"""
Regime Provider Factory.
Implements factory pattern for loading the printed regions of each regime.
"""

import logging
from functools import lru_cache

from app.core.exceptions import RegimeProviderError
from app.core.interfaces.regime import RegimeProvider
from app.models.channel import Regime

logger = logging.getLogger(__name__)


@lru_cache
def get_regime_provider(regime: Regime) -> RegimeProvider:
    """
    Factory function to get the provider of a certified regime.

    Args:
        regime: One of GreenI, GreenII, Red, Yellow

    Returns:
        Cached provider instance

    Raises:
        RegimeProviderError: Blue regimes have no printed regions here

    Example:
        >>> provider = get_regime_provider(Regime.RED)
        >>> provider.scheme
        <Scheme.E2: 'E2_noU1'>
    """
    regime = Regime(regime)
    logger.debug(f"🔌 Loading regime provider: {regime.value}")

    if regime == Regime.GREEN_I:
        from app.regimes.green_i import GreenIRegime
        return GreenIRegime()

    elif regime == Regime.GREEN_II:
        from app.regimes.green_ii import GreenIIRegime
        return GreenIIRegime()

    elif regime == Regime.RED:
        from app.regimes.red import RedRegime
        return RedRegime()

    elif regime == Regime.YELLOW:
        from app.regimes.yellow import YellowRegime
        return YellowRegime()

    raise RegimeProviderError(
        f"No regime provider for {regime.value}. "
        f"Supported regimes: GreenI, GreenII, Red, Yellow"
    )


def clear_regime_provider_cache() -> None:
    """Clears the cached provider instances."""
    logger.info("🔄 Clearing regime provider cache")
    get_regime_provider.cache_clear()
