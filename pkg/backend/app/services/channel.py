"""
Channel Service.

Symmetric exponent model, the cooperation threshold Delta_th and regime
classification, both at the exponent level (alpha, beta) and at the
absolute level (S, I, C).
"""

import logging
import math
from typing import Optional, Tuple

from app.core.config import get_settings
from app.core.exceptions import PreconditionError, RegimeMismatchError
from app.models.channel import ChannelParams, Regime, SymmetricParams

logger = logging.getLogger(__name__)

REGIME_RELATIVE_TOLERANCE = 1e-9

# Order in which increasing cooperation traverses the weak-interference regimes.
COOPERATION_ORDER = (
    Regime.GREEN_I,
    Regime.GREEN_II,
    Regime.RED,
    Regime.YELLOW,
    Regime.BLUE_STRONG_COOPERATION,
)


def expand_symmetric(
    p: SymmetricParams,
    theta_p: Optional[float] = None,
    theta_c: Optional[float] = None,
) -> ChannelParams:
    """
    Expand (S, alpha, beta) into the five link gains.

    Args:
        p: Symmetric parameters
        theta_p: Phase override (defaults to DEFAULT_THETA_P)
        theta_c: Phase override (defaults to DEFAULT_THETA_C)

    Returns:
        ChannelParams with snr = S, inr = S^alpha, coop = S^beta

    Example:
        >>> expand_symmetric(SymmetricParams(S=100, alpha=0.5, beta=1)).inr_p
        10.0
    """
    settings = get_settings()
    inr = p.S ** p.alpha
    return ChannelParams(
        snr_p=p.S,
        snr_c=p.S,
        inr_p=inr,
        inr_c=inr,
        coop=p.S ** p.beta,
        theta_p=settings.default_theta_p if theta_p is None else theta_p,
        theta_c=settings.default_theta_c if theta_c is None else theta_c,
    )


def delta_threshold(S: float, I: float) -> float:
    """Cooperation threshold (S + I + 2*sqrt(I*S*I/(1+I)))*(1+I)."""
    if S < 0 or I < 0:
        raise PreconditionError("Gains must be nonnegative")
    return (S + I + 2.0 * math.sqrt(I * S * I / (1.0 + I))) * (1.0 + I)


def require_snr_above_one(S: float) -> None:
    if not S > 1.0:
        raise PreconditionError("S must exceed 1 in linear scale")


def recover_exponents(ch: ChannelParams, S: Optional[float] = None) -> Tuple[float, float]:
    """Recover (alpha, beta) as log_S of the interference and cooperation gains."""
    S = ch.snr_p if S is None else S
    require_snr_above_one(S)
    log_s = math.log(S)
    return math.log(ch.inr_p) / log_s, math.log(ch.coop) / log_s


def classify_regime(p: SymmetricParams) -> Regime:
    """
    Classify a symmetric point by its exponents.

    Ties resolve toward the lower-cooperation regime, except beta = alpha + 1,
    which already belongs to strong cooperation.
    """
    require_snr_above_one(p.S)
    alpha, beta = p.alpha, p.beta

    if alpha >= 1.0:
        return Regime.BLUE_STRONG_INTERFERENCE
    if beta >= alpha + 1.0:
        return Regime.BLUE_STRONG_COOPERATION
    if beta > 1.0:
        return Regime.YELLOW
    if beta > max(alpha, 1.0 - alpha):
        return Regime.RED
    if beta > max(2.0 * alpha - 1.0, 0.0):
        return Regime.GREEN_II
    return Regime.GREEN_I


def green_split_level(S: float, I: float) -> float:
    """C level separating GreenI from GreenII."""
    return I * (1.0 + I) / (1.0 + S)


def classify_by_threshold(S: float, I: float, C: float) -> Regime:
    """Classify a point by its absolute gains (C against Delta_th)."""
    if I >= S:
        return Regime.BLUE_STRONG_INTERFERENCE
    if C >= delta_threshold(S, I):
        return Regime.BLUE_STRONG_COOPERATION
    if C > S:
        return Regime.YELLOW
    if C > max(I, S / (1.0 + I)):
        return Regime.RED
    if C > green_split_level(S, I):
        return Regime.GREEN_II
    return Regime.GREEN_I


def _le(x: float, y: float) -> bool:
    return x <= y + REGIME_RELATIVE_TOLERANCE * max(1.0, abs(y))


def regime_conditions_hold(S: float, I: float, C: float, r: Regime) -> bool:
    """Closed validity conditions the regime's printed regions rely on."""
    if r == Regime.BLUE_STRONG_INTERFERENCE:
        return _le(S, I)
    if not _le(I, S):
        return False
    if r == Regime.GREEN_I:
        return _le(C, green_split_level(S, I))
    if r == Regime.GREEN_II:
        return _le(C, max(I, S / (1.0 + I)))
    if r == Regime.RED:
        return _le(max(I, S / (1.0 + I)), C) and _le(C, S)
    if r == Regime.YELLOW:
        return _le(S, C) and _le(C, delta_threshold(S, I))
    return _le(delta_threshold(S, I), C)


def require_regime(S: float, I: float, C: float, r: Regime) -> None:
    if not regime_conditions_hold(S, I, C, r):
        raise RegimeMismatchError(f"(S={S:g}, I={I:g}, C={C:g}) outside the {r.value} regime")
