"""
Shared fixtures for the toolkit tests.
"""

import numpy as np
import pytest

from app.core.config import clear_settings_cache
from app.services.regime_factory import clear_regime_provider_cache


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from the environment, not a cached Settings."""
    clear_settings_cache()
    clear_regime_provider_cache()
    yield
    clear_settings_cache()
    clear_regime_provider_cache()


@pytest.fixture
def rng():
    """Seeded generator so random draws are reproducible."""
    return np.random.default_rng(20240607)
