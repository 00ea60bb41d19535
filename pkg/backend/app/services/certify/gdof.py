"""
Generalized degrees of freedom.

d(S) = max{Rp + Rc} / (2 log2(1 + S)) over the symmetric outer bound and
over the achievable region of the point, with a two-point extrapolation of
the limit S -> infinity.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from app.core.exceptions import PreconditionError
from app.models.channel import Regime
from app.models.region import RatePolytope
from app.services.certify.gap_sweep import certification_inner, classify_point
from app.services.channel import require_snr_above_one
from app.services.inner_bounds import substitute_budget
from app.services.outer_bounds import outer_symmetric
from app.services.polytope import is_empty, vertices2d

logger = logging.getLogger(__name__)

GDOF_SLACK = 1e-3
LIMIT_SLACK = 1e-9


def max_sum_rate(P: RatePolytope) -> float:
    """Largest Rp + Rc over P (0 for an empty region)."""
    return max((rp + rc for rp, rc in vertices2d(P)), default=0.0)


def richardson_limit(S_pair: Tuple[float, float], sums: Tuple[float, float]) -> float:
    """Slope of the sum rate against 2 log2(1+S) between two SNR values."""
    (S1, S2), (sum1, sum2) = S_pair, sums
    return (sum2 - sum1) / (2 * math.log2(1 + S2) - 2 * math.log2(1 + S1))


def reconcile_limits(d_outer_limit: float, d_inner_limit: float) -> Tuple[float, bool]:
    """
    Inner limit clamped to the outer one, and whether it had to be.

    Two-point slopes pick up the finite-S terms of whichever constraints bind,
    so the extrapolated inner limit can land above the outer one.
    """
    if d_inner_limit > d_outer_limit + LIMIT_SLACK:
        return d_outer_limit, True
    return d_inner_limit, False


@dataclass
class GdofCurve:
    """Outer and inner gDoF estimates of one (alpha, beta) point."""
    alpha: float
    beta: float
    snr: List[float]
    d_outer: List[float]
    d_inner: List[float]
    d_outer_limit: float
    d_inner_limit: float
    inner_source: str
    budget: float
    d_inner_limit_raw: float = math.nan
    limits_crossed: bool = False

    @property
    def spread(self) -> float:
        """Outer minus inner estimate at the largest S."""
        return self.d_outer[-1] - self.d_inner[-1]

    @property
    def sandwich_tolerance(self) -> float:
        return self.budget / math.log2(1 + self.snr[-1]) + GDOF_SLACK

    @property
    def is_success(self) -> bool:
        """Inner below outer everywhere and the spread within the budget."""
        ordered = all(di <= do + 1e-9 for di, do in zip(self.d_inner, self.d_outer))
        return ordered and self.spread <= self.sandwich_tolerance


def _inner_at(S: float, alpha: float, beta: float) -> Tuple[RatePolytope, Regime]:
    _, evaluated_as = classify_point(S, alpha, beta)
    return certification_inner(S, S ** alpha, S ** beta, evaluated_as), evaluated_as


def gdof_estimate(alpha: float, beta: float, S_list: Sequence[float]) -> GdofCurve:
    """
    gDoF estimates over ascending S values.

    Args:
        alpha: Interference exponent
        beta: Cooperation exponent
        S_list: Ascending S values (linear), each > 1

    Example:
        >>> gdof_estimate(0.0, 0.0, [1e10, 1e11, 1e12]).d_outer_limit
        1.0000...
    """
    if not S_list:
        raise PreconditionError("S_list must not be empty")
    for S in S_list:
        require_snr_above_one(S)
    if any(b <= a for a, b in zip(S_list, S_list[1:])):
        raise PreconditionError("S_list must be strictly ascending")

    outer_sums: List[float] = []
    inner_sums: List[float] = []
    sources: List[Regime] = []
    for S in S_list:
        outer_sums.append(max_sum_rate(outer_symmetric(S, S ** alpha, S ** beta)))
        inner, source = _inner_at(S, alpha, beta)
        inner_sums.append(0.0 if is_empty(inner) else max_sum_rate(inner))
        sources.append(source)

    scale = [2 * math.log2(1 + S) for S in S_list]
    d_outer = [s / k for s, k in zip(outer_sums, scale)]
    d_inner = [s / k for s, k in zip(inner_sums, scale)]

    if len(S_list) >= 2:
        S_pair = (S_list[-2], S_list[-1])
        d_outer_limit = richardson_limit(S_pair, (outer_sums[-2], outer_sums[-1]))
        d_inner_limit = richardson_limit(S_pair, (inner_sums[-2], inner_sums[-1]))
    else:
        d_outer_limit, d_inner_limit = d_outer[-1], d_inner[-1]
    d_inner_limit_raw = d_inner_limit
    d_inner_limit, limits_crossed = reconcile_limits(d_outer_limit, d_inner_limit)
    if limits_crossed:
        logger.warning(
            f"⚠️ gDoF alpha={alpha:g} beta={beta:g}: inner limit {d_inner_limit_raw:.4f} above "
            f"outer limit {d_outer_limit:.4f}, clamped"
        )

    curve = GdofCurve(
        alpha=alpha,
        beta=beta,
        snr=list(S_list),
        d_outer=d_outer,
        d_inner=d_inner,
        d_outer_limit=d_outer_limit,
        d_inner_limit=d_inner_limit,
        inner_source=sources[-1].value,
        budget=substitute_budget(sources[-1]),
        d_inner_limit_raw=d_inner_limit_raw,
        limits_crossed=limits_crossed,
    )
    logger.debug(
        f"📊 gDoF alpha={alpha:g} beta={beta:g}: outer={d_outer_limit:.4f} "
        f"inner={d_inner_limit:.4f} ({curve.inner_source})"
    )
    return curve
