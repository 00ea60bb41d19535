"""
Closed-form achievable regions after Fourier-Motzkin elimination.

Every printed row is a known sum of raw rows (CLOSED_FORM_TABLE), so the
region can be rebuilt from raw mutual-information values. The printed
Gaussian formulas (inner_closed_form) are the same sums written out for the
scheme's signal model.
"""

import logging
import math
from typing import Dict, Mapping, Optional, Tuple

from app.models.channel import ChannelParams, Scheme
from app.models.region import LinearRateConstraint, RatePolytope
from app.models.signaling import InnerOptions, PowerSplit
from app.services.gaussian_stats import conditional_mi
from app.services.inner_bounds.raw_system import RawEvaluation, evaluate_raw
from app.services.inner_bounds.signal_model import build_signal_model

logger = logging.getLogger(__name__)

# label -> (coeff_p, coeff_c, raw rows summed; repeated rows count twice)
CLOSED_FORM_TABLE: Dict[Scheme, Tuple[Tuple[str, int, int, Tuple[str, ...]], ...]] = {
    Scheme.E1: (
        ("c1C1", 1, 0, ("c3",)),
        ("c2C1", 1, 0, ("c1", "c5")),
        ("c3C1", 0, 1, ("c16",)),
        ("c4C1", 1, 1, ("c3", "c18")),
        ("c5C1", 1, 1, ("c8", "c14")),
        ("c6C1", 1, 1, ("c1", "c7", "c18")),
        ("c7C1", 1, 1, ("c1", "c8", "c15")),
        ("c8C1", 1, 1, ("c1", "c11", "c17")),
        ("c9C1", 2, 1, ("c1", "c8", "c3", "c17")),
        ("c10C1", 2, 1, ("c1", "c1", "c8", "c7", "c17")),
        ("c11C1", 1, 2, ("c11", "c17", "c14")),
        ("c12C1", 1, 2, ("c1", "c11", "c18", "c15")),
    ),
    Scheme.E2: (
        ("c1C2", 1, 0, ("c1", "c13")),
        ("c2C2", 1, 0, ("c3",)),
        ("c3C2", 0, 1, ("c16",)),
        ("c4C2", 1, 1, ("c1", "c7", "c18")),
        ("c5C2", 1, 1, ("c3", "c18")),
        ("c6C2", 1, 1, ("c2", "c13", "c14")),
        ("c7C2", 1, 1, ("c5", "c14")),
        ("c8C2", 1, 2, ("c4", "c14", "c18")),
        ("c9C2", 1, 2, ("c2", "c7", "c14", "c18")),
        ("c10C2", 1, 3, ("c9", "c7", "c14", "c18", "c18")),
    ),
}

# Constraints that survive elimination in E2 but never bind (sending no
# cognitive common message does better whenever they are active).
REMARK_TABLE = (
    ("remarkC11", 0, 1, ("c11", "c18")),
    ("remarkC9", 0, 1, ("c9", "c18")),
)


def _lg(x: float) -> float:
    return math.log2(x)


def _from_table(table, effective: Mapping[str, float], name: str) -> RatePolytope:
    return RatePolytope.of(
        [
            LinearRateConstraint(a, b, sum(effective[r] for r in rows), label=label)
            for label, a, b, rows in table
        ],
        name=name,
    )


def closed_form_from_raw(scheme: Scheme, evaluation: RawEvaluation) -> RatePolytope:
    """Rebuild the closed-form region as sums of raw effective right-hand sides."""
    scheme = Scheme(scheme)
    return _from_table(CLOSED_FORM_TABLE[scheme], evaluation.effective(), name=f"closed_form_{scheme.value}")


def remark_constraints(p: ChannelParams, s: PowerSplit, evaluation: Optional[RawEvaluation] = None) -> RatePolytope:
    """R2 <= c11 + c18 and R2 <= c9 + c18 of scheme E2."""
    ev = evaluate_raw(p, s, Scheme.E2) if evaluation is None else evaluation
    return _from_table(REMARK_TABLE, ev.effective(), name="remark_E2")


def exact_k(p: ChannelParams, s: PowerSplit) -> Tuple[float, float]:
    """k1 = I(Yc;V1) and k2 = I(Yp;S1|V1,U2) on the E2 signal model."""
    spec = build_signal_model(p, s, Scheme.E2)
    return conditional_mi(spec, ["V1"], ["Yc"]), conditional_mi(spec, ["S1"], ["Yp"], ["V1", "U2"])


def _closed_form_e1(p: ChannelParams, s: PowerSplit) -> RatePolytope:
    a1, c1, b2 = s.a1_sq, s.c1_sq, s.b2_sq
    C = p.coop
    noise_p = 1 + p.inr_c * b2
    noise_c = 1 + p.inr_p * c1

    coop = _lg((1 + C) / (1 + C * (a1 + c1)))
    full_p = _lg((1 + p.snr_p + p.inr_c) / noise_p)
    private_p = _lg(1 + p.snr_p * c1 / noise_p)
    no_common_p = _lg((1 + p.snr_p * (a1 + c1) + p.inr_c) / noise_p)
    private_with_u2 = _lg((1 + p.snr_p * c1 + p.inr_c) / noise_p)
    private_c = _lg(1 + p.snr_c * b2 / noise_c)
    full_c = _lg((1 + p.snr_c + p.inr_p) / noise_c)
    common_c = _lg(1 + (p.snr_c + p.inr_p * a1) / noise_c)
    cross_c = _lg(1 + (p.inr_p * a1 + p.snr_c * b2) / noise_c)

    rows = (
        ("c1C1", 1, 0, full_p),
        ("c2C1", 1, 0, coop + _lg(1 + p.snr_p * (a1 + c1) / noise_p)),
        ("c3C1", 0, 1, _lg(1 + p.snr_c / noise_c)),
        ("c4C1", 1, 1, full_p + private_c),
        ("c5C1", 1, 1, private_p + full_c),
        ("c6C1", 1, 1, coop + no_common_p + private_c),
        ("c7C1", 1, 1, coop + private_p + common_c),
        ("c8C1", 1, 1, coop + private_with_u2 + cross_c),
        ("c9C1", 2, 1, coop + private_p + full_p + cross_c),
        ("c10C1", 2, 1, 2 * coop + private_p + no_common_p + cross_c),
        ("c11C1", 1, 2, private_with_u2 + cross_c + full_c),
        ("c12C1", 1, 2, coop + private_with_u2 + private_c + common_c),
    )
    return RatePolytope.of(
        [LinearRateConstraint(a, b, v, label=label) for label, a, b, v in rows],
        name=f"closed_form_{Scheme.E1.value}",
    )


def _closed_form_e2(p: ChannelParams, s: PowerSplit, k1: float, k2: float) -> RatePolytope:
    C = p.coop
    noise_p = 1 + p.inr_c * s.c2_sq
    residual = 1 + p.inr_p * (s.c1_sq + s.d1_sq)
    coherent = (math.sqrt(p.snr_p) * s.a1 + math.sqrt(p.inr_c) * s.a2) ** 2

    coop = _lg(1 + C * (s.b1_sq + s.c1_sq) / (1 + C * s.d1_sq))
    coop_private = _lg(1 + C * s.c1_sq / (1 + C * s.d1_sq))
    t1 = _lg(1 + p.snr_p * s.d1_sq / noise_p)
    t1_u2 = _lg(1 + (p.snr_p * s.d1_sq + p.inr_c * s.b2_sq) / noise_p)
    full_p = _lg(
        (1 + p.snr_p + p.inr_c + 2 * math.sqrt(p.snr_p * p.inr_c * s.a1_sq * s.a2_sq)) / noise_p
    )
    cognitive = _lg(1 + p.snr_c * (s.b2_sq + s.c2_sq) / residual)
    private_c = _lg(1 + p.snr_c * s.c2_sq / residual)

    rows = (
        ("c1C2", 1, 0, coop + t1),
        ("c2C2", 1, 0, full_p),
        ("c3C2", 0, 1, cognitive),
        ("c4C2", 1, 1, coop + t1_u2 + private_c),
        ("c5C2", 1, 1, full_p + private_c),
        ("c6C2", 1, 1, coop_private + t1 + cognitive + k1),
        ("c7C2", 1, 1, _lg(1 + p.snr_p * (s.c1_sq + s.d1_sq) / noise_p) + cognitive + k1 + k2),
        (
            "c8C2", 1, 2,
            _lg(1 + (p.snr_p * (s.c1_sq + s.d1_sq) + coherent + p.inr_c * s.b2_sq) / noise_p)
            + cognitive + private_c + k1,
        ),
        ("c9C2", 1, 2, coop_private + t1_u2 + cognitive + private_c + k1),
        (
            "c10C2", 1, 3,
            _lg(1 + (p.snr_p * s.c1_sq + coherent + p.inr_c * s.b2_sq) / noise_p)
            + t1_u2 + cognitive + 2 * private_c + k1,
        ),
    )
    return RatePolytope.of(
        [LinearRateConstraint(a, b, v, label=label) for label, a, b, v in rows],
        name=f"closed_form_{Scheme.E2.value}",
    )


def inner_closed_form(
    p: ChannelParams,
    s: PowerSplit,
    scheme: Scheme,
    opts: Optional[InnerOptions] = None,
) -> RatePolytope:
    """
    Printed Gaussian closed form of an achievable scheme.

    Args:
        p: Channel parameters
        s: Power split
        scheme: E1 (12 constraints) or E2 (10 constraints)
        opts: k1/k2 for E2 (default 0); exact_k evaluates them on the covariance model

    Example:
        >>> inner_closed_form(p, split, Scheme.E2).labels[0]
        'c1C2'
    """
    scheme = Scheme(scheme)
    s.check_scheme(scheme)
    opts = InnerOptions() if opts is None else opts

    if scheme == Scheme.E1:
        return _closed_form_e1(p, s)

    k1, k2 = exact_k(p, s) if opts.exact_k else (opts.k1, opts.k2)
    return _closed_form_e2(p, s, k1, k2)
