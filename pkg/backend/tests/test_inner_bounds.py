"""
Tests for the achievable regions: signal models, the raw decoding system,
closed forms, projections and regime regions.
"""

import math

import pytest

from app.core.exceptions import AbsentMessageError, PreconditionError, RegimeMismatchError
from app.models.channel import RANK_DEFICIENT_FLAG, ChannelParams, Regime, Scheme
from app.models.signaling import SPLIT_RATE_VARIABLES, InnerOptions, PowerSplit
from app.services.certify.fme_check import FAIL, PASS, random_channel, random_split, run_fme_trial
from app.services.gaussian_stats import conditional_mi
from app.services.inner_bounds import (
    CLOSED_FORM_TABLE,
    RATE_VARIABLES,
    RAW_ROWS,
    blue_substitute_region,
    build_signal_model,
    closed_form_from_raw,
    compound_mac_region,
    dpc_coefficients,
    evaluate_raw,
    exact_k,
    inner_closed_form,
    inner_regime,
    power_split_for_regime,
    project_inner,
    rate_projection_system,
    raw_constraint_system,
    remark_constraints,
    split_rate_witness,
)
from app.services.outer_bounds import outer_regime, outer_symmetric
from app.services.polytope import region_contains, set_equal, support_deviation, vertices2d
from app.services.regime_factory import get_regime_provider

REGIME_POINTS = [
    (1.0, Regime.GREEN_I),
    (5.0, Regime.GREEN_II),
    (50.0, Regime.RED),
    (500.0, Regime.YELLOW),
]


@pytest.fixture
def channel():
    return ChannelParams(snr_p=200, snr_c=150, inr_p=20, inr_c=30, coop=40, theta_p=0.4, theta_c=1.1)


@pytest.fixture
def e1_split():
    return PowerSplit(a1_sq=0.3, b1_sq=0.3, c1_sq=0.4, a2_sq=0.6, b2_sq=0.4)


@pytest.fixture
def e2_split():
    return PowerSplit(a1_sq=0.2, b1_sq=0.3, c1_sq=0.2, d1_sq=0.3, a2_sq=0.3, b2_sq=0.3, c2_sq=0.4)


# =============================================================================
# Signal models
# =============================================================================

class TestSignalModel:
    """Tests for the Gaussian signal models and DPC coefficients."""

    def test_outputs_present(self, channel, e1_split):
        """Both receiver outputs and the overheard signal are modelled."""
        spec = build_signal_model(channel, e1_split, Scheme.E1)
        assert {"Yp", "Yc", "Tf"} <= set(spec.labels)
        assert "S1" not in spec.labels

    def test_e2_has_binned_auxiliaries(self, channel, e2_split):
        """U2 and T2 are defined on top of the fresh codewords."""
        spec = build_signal_model(channel, e2_split, Scheme.E2)
        assert {"U2", "T2", "S1", "U2p", "T2p"} <= set(spec.labels)

    def test_e1_rejects_last_layer(self, channel, e2_split):
        """E1 has no d1 or c2 share."""
        with pytest.raises(PreconditionError):
            build_signal_model(channel, e2_split, Scheme.E1)

    def test_dpc_requires_common_message(self, channel):
        """lambda_U is undefined without power on the cognitive common message."""
        split = PowerSplit(a1_sq=1.0, a2_sq=0.5, c2_sq=0.5)
        with pytest.raises(AbsentMessageError):
            dpc_coefficients(channel, split)

    def test_dpc_allow_absent(self, channel):
        """A message with no power gets a zero coefficient on request."""
        split = PowerSplit(a1_sq=1.0, a2_sq=0.5, b2_sq=0.5)
        dpc = dpc_coefficients(channel, split, allow_absent=True)
        assert dpc.lambda_T == 0
        assert dpc.lambda_U != 0

    def test_precancellation_identities(self, rng):
        """Binning makes S1 useless to the cognitive receiver beyond what it costs."""
        for _ in range(25):
            p = random_channel(rng)
            s = random_split(rng, Scheme.E2)
            spec = build_signal_model(p, s, Scheme.E2)
            lhs_u = conditional_mi(spec, ["U2"], ["Yc"], ["V1"]) - conditional_mi(spec, ["U2"], ["S1"])
            rhs_u = conditional_mi(spec, ["U2"], ["Yc"], ["V1", "S1"])
            assert lhs_u == pytest.approx(rhs_u, abs=1e-9)
            lhs_t = conditional_mi(spec, ["T2"], ["Yc"], ["V1", "U2"]) - conditional_mi(spec, ["T2"], ["S1"], ["U2"])
            rhs_t = conditional_mi(spec, ["T2"], ["Yc"], ["V1", "U2", "S1"])
            assert lhs_t == pytest.approx(rhs_t, abs=1e-9)


# =============================================================================
# Raw system
# =============================================================================

class TestRawSystem:
    """Tests for the raw decoding constraints c1-c18."""

    def test_eighteen_rows(self):
        """Rows are labelled c1..c18 in order."""
        assert [row.label for row in RAW_ROWS] == [f"c{i}" for i in range(1, 19)]

    def test_rank_deficient_channel_flagged(self, channel, e1_split):
        """A singular channel matrix is flagged on the raw system."""
        singular = ChannelParams(snr_p=1, snr_c=1, inr_p=1, inr_c=1, coop=1)
        assert RANK_DEFICIENT_FLAG in raw_constraint_system(singular, e1_split, Scheme.E1).flags
        assert RANK_DEFICIENT_FLAG not in raw_constraint_system(channel, e1_split, Scheme.E1).flags

    def test_e1_has_no_binning(self, channel, e1_split):
        """Without S1 nothing is dirty-paper coded."""
        ev = evaluate_raw(channel, e1_split, Scheme.E1)
        assert ev.bin_u == 0.0
        assert ev.bin_t == 0.0
        assert all(v >= 0 for v in ev.mi.values())

    def test_e2_binning_rates(self, channel, e2_split):
        """Binning against S1 costs a positive rate."""
        ev = evaluate_raw(channel, e2_split, Scheme.E2)
        assert ev.bin_u > 0
        assert ev.bin_total == pytest.approx(ev.bin_u + ev.bin_t)

    def test_equality_system_shape(self, channel, e1_split):
        """18 rows, four binning rows, the absent rate and nonnegativity."""
        H = raw_constraint_system(channel, e1_split, Scheme.E1)
        assert H.variables == SPLIT_RATE_VARIABLES
        assert len(H.rows) == 18 + 4 + 1 + len(SPLIT_RATE_VARIABLES)

    def test_inequality_system_shape(self, channel, e2_split):
        """Inequality binning keeps two lower bounds."""
        H = raw_constraint_system(channel, e2_split, Scheme.E2, binning="inequality")
        labels = [row.label for row in H.rows]
        assert "bin_total" in labels
        assert "bin_u_upper" not in labels

    def test_unknown_binning_mode(self, channel, e1_split):
        """Only equality and inequality binning exist."""
        with pytest.raises(PreconditionError):
            raw_constraint_system(channel, e1_split, Scheme.E1, binning="loose")


# =============================================================================
# Closed forms
# =============================================================================

class TestClosedForm:
    """Tests for the printed closed forms."""

    def test_e1_matches_raw_sums(self, channel, e1_split):
        """Every E1 closed-form row is the printed sum of raw rows."""
        from_raw = closed_form_from_raw(Scheme.E1, evaluate_raw(channel, e1_split, Scheme.E1))
        printed = inner_closed_form(channel, e1_split, Scheme.E1)
        assert from_raw.labels == printed.labels
        for label in printed.labels:
            assert from_raw.rhs_of(label) == pytest.approx(printed.rhs_of(label), abs=1e-9)

    @pytest.mark.parametrize("scheme", [Scheme.E1, Scheme.E2])
    def test_printed_terms_match_covariance_model(self, rng, scheme):
        """At 25 random splits every printed row equals its raw mutual-information sum."""
        opts = InnerOptions(exact_k=True)
        for _ in range(25):
            p = random_channel(rng)
            s = random_split(rng, scheme)
            from_raw = closed_form_from_raw(scheme, evaluate_raw(p, s, scheme))
            printed = inner_closed_form(p, s, scheme, opts)
            assert from_raw.labels == printed.labels
            for label in printed.labels:
                assert printed.rhs_of(label) == pytest.approx(from_raw.rhs_of(label), abs=1e-8), label

    def test_row_counts(self, channel, e1_split, e2_split):
        """Twelve constraints for E1, ten for E2."""
        assert len(inner_closed_form(channel, e1_split, Scheme.E1).constraints) == 12
        assert len(inner_closed_form(channel, e2_split, Scheme.E2).constraints) == 10
        assert len(CLOSED_FORM_TABLE[Scheme.E2]) == 10

    def test_exact_k_nonnegative(self, channel, e2_split):
        """k1 and k2 are mutual informations."""
        k1, k2 = exact_k(channel, e2_split)
        assert k1 >= 0 and k2 >= 0

    def test_k_only_loosens(self, channel, e2_split):
        """Exact k never shrinks the region below the k = 0 lower bound."""
        lower = inner_closed_form(channel, e2_split, Scheme.E2)
        exact = inner_closed_form(channel, e2_split, Scheme.E2, InnerOptions(exact_k=True))
        assert region_contains(exact, lower)

    def test_remark_constraints(self, channel, e2_split):
        """Two single-user bounds on R2."""
        remark = remark_constraints(channel, e2_split)
        assert remark.labels == ["remarkC11", "remarkC9"]
        assert all(c.weights == (0, 1) for c in remark.constraints)


# =============================================================================
# Projection
# =============================================================================

class TestProjection:
    """Tests for the (R1, R2) projection of the raw system."""

    def test_rate_variables_first(self, channel, e1_split):
        """R1 and R2 lead; binning rates are fixed away."""
        H = rate_projection_system(channel, e1_split, Scheme.E1)
        assert H.variables[:2] == RATE_VARIABLES
        assert "r10c" not in H.variables
        assert "r20n_prime" not in H.variables

    def test_fme_agrees_with_vertices(self, channel, e1_split):
        """Fourier-Motzkin and vertex enumeration give the same region."""
        fme = project_inner(channel, e1_split, Scheme.E1, "fme")
        oracle = project_inner(channel, e1_split, Scheme.E1, "vertices")
        assert support_deviation(fme, oracle) <= 1e-6

    def test_no_common_power_is_exact(self, rng):
        """E1 without common codewords projects exactly onto the closed form."""
        p = random_channel(rng)
        s = random_split(rng, Scheme.E1, common=False)
        fme = project_inner(p, s, Scheme.E1, "fme")
        assert set_equal(fme, inner_closed_form(p, s, Scheme.E1), tol=1e-6)

    def test_random_trials_pass(self, rng):
        """Random draws of both schemes pass the cross-check."""
        for t in range(6):
            scheme = Scheme.E1 if t % 2 == 0 else Scheme.E2
            outcome = run_fme_trial(t, random_channel(rng), random_split(rng, scheme), scheme)
            assert outcome.status != FAIL, outcome.reason

    def test_fault_offset_detected(self, channel):
        """A closed form shifted inward no longer contains the exact projection."""
        split = PowerSplit(b1_sq=0.5, c1_sq=0.5, b2_sq=1.0)
        outcome = run_fme_trial(0, channel, split, Scheme.E1, fault_offset=0.5)
        assert outcome.exact
        assert outcome.status == FAIL
        assert outcome.containment_dev == pytest.approx(0.5, abs=1e-6)

    def test_clean_trial_passes(self, channel, e1_split):
        """Without the fault the same draw passes."""
        assert run_fme_trial(0, channel, e1_split, Scheme.E1).status == PASS

    def test_witness_composes_to_rate_pair(self, channel, e1_split):
        """An interior rate pair is carried by nonnegative splits that sum to it."""
        vertices = vertices2d(project_inner(channel, e1_split, Scheme.E1, "fme"))
        R1 = sum(v[0] for v in vertices) / len(vertices)
        R2 = sum(v[1] for v in vertices) / len(vertices)
        witness = split_rate_witness(channel, e1_split, Scheme.E1, R1, R2)
        assert witness is not None
        assert witness.R1 == pytest.approx(R1, abs=1e-7)
        assert witness.R2 == pytest.approx(R2, abs=1e-7)
        assert min(witness.as_tuple()) >= -1e-9
        assert witness.r20n_prime == pytest.approx(0.0, abs=1e-9)

    def test_no_witness_outside_region(self, channel, e2_split):
        """Past the largest R1 no split works."""
        vertices = vertices2d(project_inner(channel, e2_split, Scheme.E2, "fme"))
        R1 = max(v[0] for v in vertices) + 0.5
        assert split_rate_witness(channel, e2_split, Scheme.E2, R1, 0.0) is None

    def test_unknown_method(self, channel, e1_split):
        """Only fme and vertices are supported."""
        with pytest.raises(PreconditionError):
            project_inner(channel, e1_split, Scheme.E1, "simplex")


# =============================================================================
# Regime regions
# =============================================================================

class TestRegimeRegions:
    """Tests for the regime power splits and printed regions."""

    def test_green_i_docstring_value(self):
        """lowGreeniA = log(1 + S) - 1."""
        assert inner_regime(100, 10, 1, Regime.GREEN_I).rhs_of("lowGreeniA") == pytest.approx(math.log2(101) - 1)

    @pytest.mark.parametrize("C,regime", REGIME_POINTS)
    def test_split_fits_scheme(self, C, regime):
        """The printed split is a valid split of the regime's scheme."""
        split = power_split_for_regime(100, 10, C, regime)
        split.check_scheme(get_regime_provider(regime).scheme)

    @pytest.mark.parametrize("S", [10.0, 15.0, 20.0])
    def test_red_split_values(self, S):
        """I = 1, C = 10: a1^2 = b1^2 = 31/88, c1^2 = 1/4, d1^2 = 1/22."""
        split = power_split_for_regime(S, 1.0, 10.0, Regime.RED)
        assert split.a1_sq == pytest.approx(31 / 88)
        assert split.b1_sq == pytest.approx(31 / 88)
        assert split.c1_sq == pytest.approx(1 / 4)
        assert split.d1_sq == pytest.approx(1 / 22)
        assert split.a2_sq == 0.0
        assert split.c2_sq == pytest.approx(1 / 2)

    def test_red_split_outside_regime(self):
        """S = 25 puts C = 10 below S/(1+I), which is GreenII."""
        with pytest.raises(RegimeMismatchError):
            power_split_for_regime(25.0, 1.0, 10.0, Regime.RED)

    def test_yellow_split_values(self):
        """I = 1: a1^2 = b1^2 = 1/4, c1^2 = c2^2 = b2^2 = 1/2, no T1 power."""
        split = power_split_for_regime(100.0, 1.0, 150.0, Regime.YELLOW)
        assert split.a1_sq == pytest.approx(0.25)
        assert split.b1_sq == pytest.approx(0.25)
        assert split.c1_sq == pytest.approx(0.5)
        assert split.c2_sq == pytest.approx(0.5)
        assert split.b2_sq == pytest.approx(0.5)
        assert split.d1_sq == 0.0

    @pytest.mark.parametrize("C,regime", REGIME_POINTS)
    def test_inner_inside_outer(self, C, regime):
        """Achievable regions sit inside both outer regions."""
        inner = inner_regime(100, 10, C, regime)
        assert region_contains(outer_regime(100, 10, C, regime), inner)
        assert region_contains(outer_symmetric(100, 10, C), inner)

    def test_compound_mac(self):
        """Both receivers decode both messages."""
        P = compound_mac_region(100, 400)
        assert P.rhs_of("macSum") == pytest.approx(math.log2(501))
        assert P.rhs_of("macRp") == pytest.approx(math.log2(101))

    def test_blue_substitutes(self):
        """Strong interference uses the compound MAC, strong cooperation the Yellow region."""
        assert blue_substitute_region(100, 400, 5, Regime.BLUE_STRONG_INTERFERENCE).name == "compound_mac"
        cooperation = blue_substitute_region(100, 10, 1e5, Regime.BLUE_STRONG_COOPERATION)
        assert cooperation.labels[0] == "lowYellowA"

    def test_substitute_falls_through(self):
        """Certified regimes keep their printed region."""
        assert blue_substitute_region(100, 10, 1, Regime.GREEN_I).name == "lowGreeni"
