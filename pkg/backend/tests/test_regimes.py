"""
Tests for the regime providers and the constraint ledger.
"""

import math

import pytest

from app.core.exceptions import RegimeMismatchError, RegimeProviderError
from app.models.channel import Regime, Scheme
from app.services.certify import constraint_ledger
from app.services.regime_factory import clear_regime_provider_cache, get_regime_provider

REGIME_POINTS = [
    (1.0, Regime.GREEN_I),
    (5.0, Regime.GREEN_II),
    (50.0, Regime.RED),
    (500.0, Regime.YELLOW),
]


# =============================================================================
# Factory
# =============================================================================

class TestRegimeFactory:
    """Tests for get_regime_provider."""

    def test_provider_cached(self):
        """The same instance comes back until the cache is cleared."""
        first = get_regime_provider(Regime.RED)
        assert get_regime_provider(Regime.RED) is first
        clear_regime_provider_cache()
        assert get_regime_provider(Regime.RED) is not first

    def test_accepts_value(self):
        """Regimes may be given by their string value."""
        assert get_regime_provider("Yellow").regime == Regime.YELLOW

    @pytest.mark.parametrize("regime", [Regime.BLUE_STRONG_INTERFERENCE, Regime.BLUE_STRONG_COOPERATION])
    def test_blue_rejected(self, regime):
        """Blue regimes have no printed regions."""
        with pytest.raises(RegimeProviderError):
            get_regime_provider(regime)

    @pytest.mark.parametrize(
        "regime,scheme",
        [
            (Regime.GREEN_I, Scheme.E1),
            (Regime.GREEN_II, Scheme.E1),
            (Regime.RED, Scheme.E2),
            (Regime.YELLOW, Scheme.E2),
        ],
    )
    def test_scheme(self, regime, scheme):
        """Green regimes use E1, Red and Yellow use E2."""
        assert get_regime_provider(regime).scheme == scheme


# =============================================================================
# Providers
# =============================================================================

class TestProviders:
    """Tests shared by all four providers."""

    @pytest.mark.parametrize("C,regime", REGIME_POINTS)
    def test_label_prefixes(self, C, regime):
        """Inner labels start with 'low', outer labels with 'out'."""
        provider = get_regime_provider(regime)
        assert all(label.startswith("low") for label in provider.inner_region(100, 10, C).labels)
        assert all(label.startswith("out") for label in provider.outer_region(100, 10, C).labels)

    @pytest.mark.parametrize("C,regime", REGIME_POINTS)
    def test_ledger_covers_inner_region(self, C, regime):
        """Every printed inner constraint is paired with existing outer labels."""
        provider = get_regime_provider(regime)
        inner_labels = provider.inner_region(100, 10, C).labels
        outer_labels = set(provider.outer_region(100, 10, C).labels)
        assert [inner for inner, _ in provider.ledger_pairs] == inner_labels
        for _, outers in provider.ledger_pairs:
            assert outers and set(outers) <= outer_labels

    @pytest.mark.parametrize("C,regime", REGIME_POINTS)
    def test_power_split_sums(self, C, regime):
        """Shares of each transmitter add up to one."""
        s = get_regime_provider(regime).power_split(100, 10, C)
        assert s.a1_sq + s.b1_sq + s.c1_sq + s.d1_sq == pytest.approx(1.0)
        assert s.a2_sq + s.b2_sq + s.c2_sq == pytest.approx(1.0)

    def test_constants_match_budgets(self):
        """Yellow claims two bits per user, the others at most five."""
        assert get_regime_provider(Regime.YELLOW).ledger_constant == Regime.YELLOW.budget_bits
        for regime in (Regime.GREEN_I, Regime.GREEN_II, Regime.RED):
            assert get_regime_provider(regime).ledger_constant <= regime.budget_bits


# =============================================================================
# Ledger
# =============================================================================

class TestConstraintLedger:
    """Tests for constraint_ledger."""

    def test_green_i_cutset_pair(self):
        """lowGreeniA vs outGreeniA differ by exactly two bits."""
        entries = constraint_ledger(100, 10, 1, Regime.GREEN_I)
        assert entries[0].inner_label == "lowGreeniA"
        assert entries[0].slack == pytest.approx(2.0)

    def test_red_cognitive_pair(self):
        """lowRedC vs outRedC differ by log 3."""
        entry = next(e for e in constraint_ledger(100, 10, 50, Regime.RED) if e.inner_label == "lowRedC")
        assert entry.slack == pytest.approx(math.log2(3))

    def test_yellow_combined_pair(self):
        """lowYellowD is bounded by outYellowA + outYellowC, per user within two bits."""
        entry = next(e for e in constraint_ledger(100, 10, 500, Regime.YELLOW) if e.inner_label == "lowYellowD")
        assert entry.outer_labels == ("outYellowA", "outYellowC")
        assert entry.slack <= 2.0 + 1e-9

    def test_repeated_outer_label_counts_twice(self):
        """lowYellowI pairs with 2*outYellowC + outYellowE."""
        entry = next(e for e in constraint_ledger(100, 10, 500, Regime.YELLOW) if e.inner_label == "lowYellowI")
        assert entry.outer_labels.count("outYellowC") == 2

    @pytest.mark.parametrize("C,regime", REGIME_POINTS)
    def test_all_within_constant(self, C, regime):
        """No pairing exceeds the regime's per-user constant."""
        entries = constraint_ledger(100, 10, C, regime)
        assert entries
        assert all(e.within_constant for e in entries)

    def test_mismatch(self):
        """Ledgers are only stated inside their regime."""
        with pytest.raises(RegimeMismatchError):
            constraint_ledger(100, 10, 500, Regime.RED)
