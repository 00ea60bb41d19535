"""
Gaussian signal models of the two achievable schemes.

Builds the covariance oracle (LinearGaussianModel) for the channel outputs
Yp, Yc, Tf and the auxiliaries of a scheme, with the dirty-paper binning
U2 = U2' + lambda_U*S1, T2 = T2' + lambda_T*S1 in scheme E2.
"""

import cmath
import logging
import math
from typing import FrozenSet

from app.core.exceptions import AbsentMessageError
from app.models.channel import ChannelParams, Scheme
from app.models.signaling import DpcCoefficients, PowerSplit
from app.services.gaussian_stats import CovSpec, LinearGaussianModel

logger = logging.getLogger(__name__)

# Auxiliaries that carry no message in each scheme.
ABSENT_AUXILIARIES = {
    Scheme.E1: frozenset({"S1", "Z1"}),
    Scheme.E2: frozenset({"U1"}),
}

E1_SOURCES = ("V1", "U1", "T1", "U2", "T2", "Zp", "Zc", "Zf")
E2_SOURCES = ("V1", "S1", "Z1", "T1", "U2p", "T2p", "Zp", "Zc", "Zf")


def absent_auxiliaries(scheme: Scheme) -> FrozenSet[str]:
    return ABSENT_AUXILIARIES[Scheme(scheme)]


def _known_interference(p: ChannelParams, s: PowerSplit) -> complex:
    """Gain of S1 at the cognitive receiver."""
    return (
        math.sqrt(p.inr_p) * cmath.exp(1j * p.theta_p) * cmath.exp(1j * p.theta_c) * s.a1
        + math.sqrt(p.snr_c) * s.a2
    )


def dpc_coefficients(p: ChannelParams, s: PowerSplit, allow_absent: bool = False) -> DpcCoefficients:
    """
    Binning coefficients that pre-cancel S1 at the cognitive receiver.

    Args:
        p: Channel parameters
        s: Power split (scheme E2 roles)
        allow_absent: Return 0 for a message with no power instead of raising

    Raises:
        AbsentMessageError: b2 = 0 (lambda_U) or c2 = 0 (lambda_T) without allow_absent
    """
    A = _known_interference(p, s)
    residual = 1 + p.inr_p * (s.c1_sq + s.d1_sq)
    root_snr = math.sqrt(p.snr_c)

    if s.b2 > 0 and p.snr_c > 0:
        weight = p.snr_c * s.b2_sq / (p.snr_c * s.b2_sq + p.snr_c * s.c2_sq + residual)
        lambda_U = weight * A / (root_snr * s.b2)
    elif allow_absent:
        lambda_U = 0j
    else:
        raise AbsentMessageError("lambda_U undefined: the cognitive common message has no power (b2 = 0)")

    if s.c2 > 0 and p.snr_c > 0:
        weight = p.snr_c * s.c2_sq / (p.snr_c * s.c2_sq + residual)
        lambda_T = weight * (A - root_snr * s.b2 * lambda_U) / (root_snr * s.c2)
    elif allow_absent:
        lambda_T = 0j
    else:
        raise AbsentMessageError("lambda_T undefined: the cognitive private message has no power (c2 = 0)")

    return DpcCoefficients(lambda_U=complex(lambda_U), lambda_T=complex(lambda_T))


def _add_outputs(model: LinearGaussianModel, p: ChannelParams) -> None:
    model.define("Yp", {
        "Xp": math.sqrt(p.snr_p),
        "Xc": math.sqrt(p.inr_c) * cmath.exp(1j * p.theta_c),
        "Zp": 1.0,
    })
    model.define("Yc", {
        "Xp": math.sqrt(p.inr_p) * cmath.exp(1j * p.theta_p),
        "Xc": math.sqrt(p.snr_c),
        "Zc": 1.0,
    })
    # The cognitive transmitter removes its own signal from what it overhears.
    model.define("Tf", {"Xp": math.sqrt(p.coop), "Zf": 1.0})


def build_signal_model(p: ChannelParams, s: PowerSplit, scheme: Scheme) -> CovSpec:
    """
    Covariance spec of all auxiliaries and outputs for one scheme.

    Example:
        >>> spec = build_signal_model(p, split, Scheme.E1)
        >>> "Yp" in spec.labels
        True
    """
    scheme = Scheme(scheme)
    s.check_scheme(scheme)

    if scheme == Scheme.E1:
        model = LinearGaussianModel(E1_SOURCES)
        model.define("Xp", {"U1": s.a1, "V1": s.b1, "T1": s.c1})
        model.define("Xc", {"U2": s.a2, "T2": s.b2})
    else:
        model = LinearGaussianModel(E2_SOURCES)
        dpc = dpc_coefficients(p, s, allow_absent=True)
        model.define("Xp", {
            "S1": s.a1 * cmath.exp(1j * p.theta_c),
            "V1": s.b1,
            "Z1": s.c1,
            "T1": s.d1,
        })
        model.define("Xc", {"S1": s.a2, "U2p": s.b2, "T2p": s.c2})
        model.define("U2", {"U2p": 1.0, "S1": dpc.lambda_U})
        model.define("T2", {"T2p": 1.0, "S1": dpc.lambda_T})

    _add_outputs(model, p)
    return model.spec()
