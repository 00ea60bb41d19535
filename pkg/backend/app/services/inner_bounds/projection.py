"""
Projection of the raw achievable system onto (R1, R2).

Binning rates are pinned at equality and the absent split rate at zero;
r10c and r20n are replaced by R1 - (r11c + r10n + r11n) and R2 - r22n.
What remains is a small system that both the Fourier-Motzkin projector and
the vertex oracle can handle.
"""

import logging
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from app.core.exceptions import GeometryError, PreconditionError
from app.models.channel import ChannelParams, Scheme
from app.models.region import HalfSpace, HPolyhedron, RatePolytope
from app.models.signaling import SPLIT_RATE_VARIABLES, PowerSplit, SplitRateVector
from app.services.inner_bounds.raw_system import (
    ABSENT_RATE,
    BIN_T,
    BIN_U,
    RawEvaluation,
    evaluate_raw,
    raw_constraint_system,
)
from app.services.polytope import fme_project, project_by_vertices, to_rate_polytope

logger = logging.getLogger(__name__)

RATE_VARIABLES = ("R1", "R2")


def rate_projection_system(
    p: ChannelParams,
    s: PowerSplit,
    scheme: Scheme,
    evaluation: Optional[RawEvaluation] = None,
) -> HPolyhedron:
    """Raw system rewritten over (R1, R2) and the remaining split rates."""
    scheme = Scheme(scheme)
    ev = evaluate_raw(p, s, scheme) if evaluation is None else evaluation
    H = raw_constraint_system(p, s, scheme, binning="equality", evaluation=ev)
    H = H.fix(BIN_U, ev.bin_u).fix(BIN_T, ev.bin_t).fix(ABSENT_RATE[scheme], 0.0)

    splits_1 = [v for v in ("r11c", "r10n", "r11n") if v in H.variables]
    H = H.substitute("r10c", {"R1": 1, **{v: -1 for v in splits_1}})
    H = H.substitute("r20n", {"R2": 1, "r22n": -1})

    # Rates first so the elimination list is simply the tail.
    order = RATE_VARIABLES + tuple(v for v in H.variables if v not in RATE_VARIABLES)
    columns = [H.index(v) for v in order]
    rows = tuple(
        HalfSpace(tuple(row.coeffs[j] for j in columns), row.rhs, row.label) for row in H.rows
    )
    return HPolyhedron(variables=order, rows=rows, flags=H.flags)


def project_inner(
    p: ChannelParams,
    s: PowerSplit,
    scheme: Scheme,
    method: str = "fme",
    evaluation: Optional[RawEvaluation] = None,
) -> RatePolytope:
    """
    Numeric (R1, R2) projection of the raw system.

    Args:
        method: "fme" (Fourier-Motzkin) or "vertices" (enumeration oracle)
    """
    H = rate_projection_system(p, s, scheme, evaluation)
    if method == "fme":
        projected = fme_project(H, [v for v in H.variables if v not in RATE_VARIABLES])
        return to_rate_polytope(projected, name=f"fme_{Scheme(scheme).value}")
    if method == "vertices":
        return project_by_vertices(H, RATE_VARIABLES)
    raise PreconditionError(f"Unknown projection method '{method}'")


def split_rate_witness(
    p: ChannelParams,
    s: PowerSplit,
    scheme: Scheme,
    R1: float,
    R2: float,
    evaluation: Optional[RawEvaluation] = None,
) -> Optional[SplitRateVector]:
    """
    Split and binning rates that achieve (R1, R2) in the raw system.

    Returns None when no split does. Rates slightly outside the region
    (by the raw rows' rounding) are not accepted.

    Raises:
        GeometryError: the feasibility LP fails for another reason
    """
    H = raw_constraint_system(p, s, scheme, evaluation=evaluation)
    A, b = H.as_arrays()
    composition = np.zeros((2, len(SPLIT_RATE_VARIABLES)))
    for name in ("r10c", "r11c", "r10n", "r11n"):
        composition[0, H.index(name)] = 1.0
    for name in ("r20n", "r22n"):
        composition[1, H.index(name)] = 1.0

    result = linprog(
        np.zeros(A.shape[1]),
        A_ub=A,
        b_ub=b,
        A_eq=composition,
        b_eq=np.array([R1, R2]),
        bounds=[(None, None)] * A.shape[1],
        method="highs",
    )
    if result.status == 2:
        logger.debug(f"⚠️ ({R1:.4f}, {R2:.4f}) has no split-rate witness in {Scheme(scheme).value}")
        return None
    if result.status != 0:
        raise GeometryError(f"Witness LP failed: {result.message}")
    return SplitRateVector.from_values(result.x)
