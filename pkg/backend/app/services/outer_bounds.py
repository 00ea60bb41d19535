"""
Outer Bounds Service.

Gaussian outer bounds of the causal cognitive interference channel:
  - outer_symmetric: the eight printed rho-free constraints
  - outer_general_rho: the same constraints before maximizing over the
    input correlation rho = E[Xp Xc*]
  - outer_regime: the relaxed region of a certified regime
  - outer_reference: the non-causal CIC and classical IC reference regions

All logarithms are base 2; additive log(2) terms are kept in the
`constant` field of each constraint.
"""

import cmath
import logging
import math

from app.core.exceptions import PreconditionError
from app.models.channel import RANK_DEFICIENT_FLAG, ChannelParams, OuterBoundId, ReferenceKind, Regime
from app.models.region import LinearRateConstraint, RatePolytope
from app.services.channel import require_regime
from app.services.regime_factory import get_regime_provider

logger = logging.getLogger(__name__)

RHO_TOLERANCE = 1e-12

# Coefficient vector of every outer constraint.
OUTER_WEIGHTS = {
    OuterBoundId.CUTSET_P_C: (1, 0),
    OuterBoundId.CUTSET_P_I: (1, 0),
    OuterBoundId.CUTSET_C: (0, 1),
    OuterBoundId.SUM_TUNI: (1, 1),
    OuterBoundId.SUM_TUNI_C: (1, 1),
    OuterBoundId.SUM_PV: (1, 1),
    OuterBoundId.TWO_PP_PC: (2, 1),
    OuterBoundId.PP_TWO_PC: (1, 2),
}

# Outer constraints whose gain part grows with C.
C_MONOTONE_BOUNDS = (
    OuterBoundId.SUM_TUNI_C,
    OuterBoundId.SUM_PV,
    OuterBoundId.TWO_PP_PC,
    OuterBoundId.PP_TWO_PC,
)


def _lg(x: float) -> float:
    return math.log2(x)


def _outer(bound_id: OuterBoundId, gain: float, constant: float = 0.0) -> LinearRateConstraint:
    coeff_p, coeff_c = OUTER_WEIGHTS[bound_id]
    return LinearRateConstraint(
        coeff_p=coeff_p,
        coeff_c=coeff_c,
        rhs=gain + constant,
        label=bound_id.value,
        constant=constant,
    )


def _require_gains(*gains: float) -> None:
    if any(g < 0 or not math.isfinite(g) for g in gains):
        raise PreconditionError(f"Gains must be finite and nonnegative, got {gains}")


def outer_symmetric(S: float, I: float, C: float) -> RatePolytope:
    """
    Symmetric outer bound (eight constraints, rho maximized out).

    Example:
        >>> outer_symmetric(1, 0, 0).rhs_of("11a")
        1.0
    """
    _require_gains(S, I, C)
    coherent = _lg(1 + (math.sqrt(S) + math.sqrt(I)) ** 2)
    tin = _lg(1 + S / (1 + I))
    delta_g = _lg(1 + C / (1 + I + S)) + _lg(1 + I + S * (1 + C) / (1 + I + C))
    delta_h = _lg(1 + C + I + S / (1 + I))

    return RatePolytope.of(
        [
            _outer(OuterBoundId.CUTSET_P_C, _lg(1 + C + S)),
            _outer(OuterBoundId.CUTSET_P_I, coherent),
            _outer(OuterBoundId.CUTSET_C, _lg(1 + S)),
            _outer(OuterBoundId.SUM_TUNI, tin + coherent),
            _outer(OuterBoundId.SUM_TUNI_C, _lg(1 + (S + C) / (1 + I)) + coherent),
            _outer(
                OuterBoundId.SUM_PV,
                _lg(1 + C + I + S / (1 + I)) + _lg(1 + I + S * (1 + C) / (1 + C + I)),
                2,
            ),
            _outer(OuterBoundId.TWO_PP_PC, coherent + tin + delta_g, 1),
            _outer(OuterBoundId.PP_TWO_PC, coherent + tin + delta_h, 1),
        ],
        name="outer_symmetric",
    )


def outer_general_rho(p: ChannelParams, rho: complex) -> RatePolytope:
    """
    Outer constraints evaluated at a fixed input correlation rho.

    Every value is bounded by the matching outer_symmetric constraint on a
    symmetric channel; sweeping rho checks that dominance.

    Raises:
        PreconditionError: |rho| > 1
    """
    rho = complex(rho)
    if abs(rho) > 1 + RHO_TOLERANCE:
        raise PreconditionError(f"|rho| must not exceed 1, got {abs(rho)}")

    u = max(0.0, 1.0 - abs(rho) ** 2)
    C = p.coop
    re_c = (rho * cmath.exp(-1j * p.theta_c)).real
    re_p = (rho * cmath.exp(1j * p.theta_p)).real

    # Received power at each receiver with correlated inputs.
    gain_p = p.snr_p + p.inr_c + 2 * math.sqrt(p.snr_p * p.inr_c) * re_c
    gain_c = p.snr_c + p.inr_p + 2 * math.sqrt(p.snr_c * p.inr_p) * re_p
    gain_p, gain_c = max(gain_p, 0.0), max(gain_c, 0.0)

    pv_first = _lg(1 + (gain_p + u * (p.inr_p * p.inr_c + C * p.inr_c)) / (1 + C + p.inr_p))
    pv_second = _lg(
        1 + (C + gain_c + u * (p.inr_p * p.inr_c + C * p.snr_c + p.inr_c * C)) / (1 + p.inr_c)
    )

    flags = () if p.is_full_rank() else (RANK_DEFICIENT_FLAG,)
    if flags:
        logger.debug("⚠️ Rank-deficient channel matrix in outer_general_rho")

    return RatePolytope.of(
        [
            _outer(OuterBoundId.CUTSET_P_C, _lg(1 + (C + p.snr_p) * u)),
            _outer(OuterBoundId.CUTSET_P_I, _lg(1 + gain_p)),
            _outer(OuterBoundId.CUTSET_C, _lg(1 + u * p.snr_c)),
            _outer(OuterBoundId.SUM_TUNI, _lg(1 + p.snr_c * u / (1 + p.inr_c * u)) + _lg(1 + gain_p)),
            _outer(
                OuterBoundId.SUM_TUNI_C,
                _lg(1 + (p.snr_p + C) * u / (1 + p.inr_p * u)) + _lg(1 + gain_c),
            ),
            _outer(OuterBoundId.SUM_PV, pv_first + pv_second),
            _outer(
                OuterBoundId.TWO_PP_PC,
                _lg(1 + gain_p) + _lg(1 + p.snr_p * u / (1 + (C + p.inr_p) * u)) + pv_second,
            ),
            _outer(
                OuterBoundId.PP_TWO_PC,
                _lg(1 + gain_c)
                + _lg(1 + p.snr_c * u / (1 + p.inr_c * u))
                + pv_first
                + _lg(1 + C / (1 + p.inr_p)),
            ),
        ],
        name="outer_general_rho",
        flags=flags,
    )


def outer_regime(S: float, I: float, C: float, r: Regime) -> RatePolytope:
    """
    Relaxed outer region of regime r.

    Raises:
        RegimeMismatchError: (S, I, C) violate the regime's conditions
        RegimeProviderError: r is a Blue regime
    """
    _require_gains(S, I, C)
    provider = get_regime_provider(r)
    require_regime(S, I, C, r)
    return provider.outer_region(S, I, C)


def outer_reference(S: float, I: float, C: float, kind: ReferenceKind) -> RatePolytope:
    """
    Reference outer regions.

    NonCausalCIC keeps the interference-path cut-set, the cognitive cut-set
    and the treat-as-noise sum bound. ClassicalIC is the six-constraint
    region of the interference channel without cooperation.
    """
    _require_gains(S, I, C)
    kind = ReferenceKind(kind)
    p2p = _lg(1 + S)
    tin = _lg(1 + S / (1 + I))

    if kind == ReferenceKind.NON_CAUSAL_CIC:
        coherent = _lg(1 + (math.sqrt(S) + math.sqrt(I)) ** 2)
        return RatePolytope.of(
            [
                LinearRateConstraint(1, 0, coherent, label="ncRp"),
                LinearRateConstraint(0, 1, p2p, label="ncRc"),
                LinearRateConstraint(1, 1, tin + coherent, label="ncSum"),
            ],
            name=kind.value,
        )

    hk = _lg(1 + I + S / (1 + I))
    weighted = _lg(1 + S + I) + _lg((1 + S) / (1 + I)) + hk
    constraints = [
        (1, 0, p2p, 2, "icRp"),
        (0, 1, p2p, 0, "icRc"),
        (1, 1, p2p + tin, 2, "icSumTin"),
        (1, 1, 2 * hk, 4, "icSumHk"),
        (2, 1, weighted, 5, "icTwoPpPc"),
        (1, 2, weighted, 4, "icPpTwoPc"),
    ]
    return RatePolytope.of(
        [
            LinearRateConstraint(a, b, gain + const, label=label, constant=const)
            for a, b, gain, const, label in constraints
        ],
        name=kind.value,
    )
