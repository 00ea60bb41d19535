"""
Fourier-Motzkin projection of half-space systems.

Rows are paired with exact rational coefficients; right-hand sides stay
floating point. After every elimination stage redundant rows are pruned
with one bounded LP per row (scipy HiGHS).
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from app.core.config import get_settings
from app.core.exceptions import GeometryError, InfeasibleSystemError, PreconditionError
from app.models.region import HalfSpace, HPolyhedron, LinearRateConstraint, RatePolytope
from app.services.polytope.planar import vertices2d

logger = logging.getLogger(__name__)

ROW_TOLERANCE = 1e-9


def _normalize(row: HalfSpace) -> Optional[HalfSpace]:
    """Scale to max |coeff| = 1; None for a trivially true row."""
    scale = max((abs(c) for c in row.coeffs), default=Fraction(0))
    if scale == 0:
        if row.rhs < -ROW_TOLERANCE * max(1.0, abs(row.rhs)):
            raise InfeasibleSystemError(f"Contradictory row {row.label}: 0 <= {row.rhs}")
        return None
    return HalfSpace(tuple(c / scale for c in row.coeffs), row.rhs / float(scale), row.label)


def _dedupe(rows: List[HalfSpace]) -> List[HalfSpace]:
    """Keep the tightest rhs per coefficient vector."""
    best: Dict[Tuple[Fraction, ...], HalfSpace] = {}
    for row in rows:
        kept = best.get(row.coeffs)
        if kept is None or row.rhs < kept.rhs:
            best[row.coeffs] = row
    return list(best.values())


def _eliminate_one(rows: Sequence[HalfSpace], j: int) -> List[HalfSpace]:
    positive = [r for r in rows if r.coeffs[j] > 0]
    negative = [r for r in rows if r.coeffs[j] < 0]
    combined = [r for r in rows if r.coeffs[j] == 0]

    for p in positive:
        for n in negative:
            wp, wn = -n.coeffs[j], p.coeffs[j]
            coeffs = tuple(wp * a + wn * b for a, b in zip(p.coeffs, n.coeffs))
            label = f"{p.label}+{n.label}" if p.label or n.label else None
            combined.append(HalfSpace(coeffs, float(wp) * p.rhs + float(wn) * n.rhs, label))

    dropped = []
    for row in combined:
        coeffs = row.coeffs[:j] + row.coeffs[j + 1:]
        normalized = _normalize(HalfSpace(coeffs, row.rhs, row.label))
        if normalized is not None:
            dropped.append(normalized)
    return _dedupe(dropped)


def _row_max(A: np.ndarray, b: np.ndarray, objective: np.ndarray, box: float) -> float:
    result = linprog(-objective, A_ub=A, b_ub=b, bounds=[(-box, box)] * A.shape[1], method="highs")
    if result.status == 2:
        raise InfeasibleSystemError("Half-space system is empty")
    if result.status != 0:
        raise GeometryError(f"Redundancy LP failed: {result.message}")
    return -result.fun


def prune_redundant(rows: Sequence[HalfSpace], dimension: int) -> List[HalfSpace]:
    """Remove rows implied by the others, one at a time."""
    box = get_settings().box_bound_bits
    kept = list(rows)
    if dimension == 0:
        return kept

    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        row = kept[i]
        objective = np.array([float(c) for c in row.coeffs])
        if others:
            A = np.array([[float(c) for c in r.coeffs] for r in others])
            b = np.array([r.rhs for r in others])
        else:
            A, b = np.zeros((1, dimension)), np.zeros(1)
        value = _row_max(A, b, objective, box)
        if value <= row.rhs + ROW_TOLERANCE * max(1.0, abs(row.rhs)):
            kept.pop(i)
        else:
            i += 1
    return kept


def fme_project(H: HPolyhedron, eliminate: Sequence[str], prune: bool = True) -> HPolyhedron:
    """
    Eliminate the listed variables in order.

    Args:
        H: Half-space system
        eliminate: Variable labels to remove
        prune: Run LP redundancy pruning after every stage

    Returns:
        System over the remaining variables with the same shadow

    Raises:
        PreconditionError: unknown variable label
        InfeasibleSystemError: contradictory rows found along the way

    Example:
        >>> H = HPolyhedron.from_dicts(["x", "z"], [({"z": 1}, 3, None), ({"z": -1}, -1, None), ({"x": 1, "z": -1}, 0, None)])
        >>> [(r.coeffs, r.rhs) for r in fme_project(H, ["z"]).rows]
        [((Fraction(1, 1),), 3.0)]
    """
    for v in eliminate:
        H.index(v)

    variables = list(H.variables)
    rows = [r for r in (_normalize(row) for row in H.rows) if r is not None]

    for v in eliminate:
        j = variables.index(v)
        rows = _eliminate_one(rows, j)
        variables.pop(j)
        if prune and rows:
            rows = prune_redundant(rows, len(variables))
        logger.debug(f"🔄 Eliminated {v}: {len(rows)} rows over {len(variables)} variables")

    return HPolyhedron(variables=tuple(variables), rows=tuple(rows), flags=H.flags)


def to_rate_polytope(H: HPolyhedron, name: str = "") -> RatePolytope:
    """
    Convert a two-variable system over (Rp, Rc) to a rate polytope.

    Rows with nonnegative coefficients become constraints. Any other row
    must be implied by those constraints on the quadrant.

    Raises:
        PreconditionError: H is not two-dimensional
        GeometryError: a row with a negative coefficient cuts the region
    """
    if H.dimension != 2:
        raise PreconditionError(f"Expected a system over two rates, got {H.variables}")

    kept: List[LinearRateConstraint] = []
    other: List[HalfSpace] = []
    for row in H.rows:
        a, b = float(row.coeffs[0]), float(row.coeffs[1])
        if a >= 0 and b >= 0 and (a > 0 or b > 0):
            kept.append(LinearRateConstraint(a, b, row.rhs, label=row.label))
        elif not row.is_trivial():
            other.append(row)

    P = RatePolytope.of(kept, name=name, flags=H.flags)
    vertices = vertices2d(P)
    for row in other:
        a, b = float(row.coeffs[0]), float(row.coeffs[1])
        worst = max((a * v[0] + b * v[1] for v in vertices), default=-np.inf)
        if worst > row.rhs + ROW_TOLERANCE * max(1.0, abs(row.rhs)):
            raise GeometryError(f"Row {row.label} ({a}, {b}) <= {row.rhs} is not a rate constraint")
    return P
