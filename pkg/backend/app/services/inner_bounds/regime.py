"""
Regime-level achievable regions.

Power splits and printed regions come from the regime providers; the two
Blue regimes get the substitute regions used for gDoF sandwiches.
"""

import logging
import math

import numpy as np

from app.models.channel import Regime
from app.models.region import LinearRateConstraint, RatePolytope
from app.models.signaling import PowerSplit
from app.services.channel import require_regime
from app.services.polytope import hull_polytope, vertices2d
from app.services.regime_factory import get_regime_provider

logger = logging.getLogger(__name__)


def power_split_for_regime(S: float, I: float, C: float, r: Regime) -> PowerSplit:
    """
    Printed power split of regime r.

    Raises:
        RegimeMismatchError: (S, I, C) outside the regime
        RegimeProviderError: Blue regime
    """
    provider = get_regime_provider(r)
    require_regime(S, I, C, r)
    return provider.power_split(S, I, C)


def inner_regime(S: float, I: float, C: float, r: Regime) -> RatePolytope:
    """
    Printed achievable region of regime r.

    Example:
        >>> inner_regime(100, 10, 1, Regime.GREEN_I).rhs_of("lowGreeniA")
        5.658211482751795
    """
    provider = get_regime_provider(r)
    require_regime(S, I, C, r)
    return provider.inner_region(S, I, C)


def compound_mac_region(S: float, I: float) -> RatePolytope:
    """
    Both receivers decode both messages, ignoring the cooperation link.

    Achievable whenever I >= S.
    """
    return RatePolytope.of(
        [
            LinearRateConstraint(1, 0, math.log2(1 + S), label="macRp"),
            LinearRateConstraint(0, 1, math.log2(1 + S), label="macRc"),
            LinearRateConstraint(1, 1, math.log2(1 + S + I), label="macSum"),
        ],
        name="compound_mac",
    )


def blue_substitute_region(S: float, I: float, C: float, r: Regime) -> RatePolytope:
    """
    Substitute achievable region of a Blue regime.

    Strong interference uses the compound MAC; strong cooperation uses the
    Yellow region, whose scheme does not rely on C staying below the threshold.
    """
    r = Regime(r)
    if r == Regime.BLUE_STRONG_INTERFERENCE:
        return compound_mac_region(S, I)
    if r == Regime.BLUE_STRONG_COOPERATION:
        return get_regime_provider(Regime.YELLOW).inner_region(S, I, C)
    return inner_regime(S, I, C, r)


def time_shared_region(P: RatePolytope, S: float) -> RatePolytope:
    """
    Convex hull of P with the two single-user corners (lg(1+S), 0) and (0, lg(1+S)).

    Either user alone reaches its point-to-point rate while the other stays
    silent, so the hull is achievable whenever P is.

    Example:
        >>> len(vertices2d(time_shared_region(origin_region(), 3)))
        3
    """
    single_user = math.log2(1 + S)
    points = [(0.0, 0.0), (single_user, 0.0), (0.0, single_user)] + vertices2d(P)
    return hull_polytope(np.array(points, dtype=float), name=f"time_shared_{P.name}", flags=P.flags)


def substitute_budget(r: Regime) -> float:
    """
    Budget a Blue point is held to with its substitute region.

    Strong cooperation borrows the Yellow region and with it the Yellow budget.
    """
    r = Regime(r)
    if r == Regime.BLUE_STRONG_COOPERATION:
        return Regime.YELLOW.budget_bits
    return r.budget_bits
