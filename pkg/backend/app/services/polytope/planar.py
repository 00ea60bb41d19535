"""
Planar rate-region geometry.

Vertices, containment, support functions and the constant-gap shift of
2-D rate polytopes {(Rp, Rc) >= 0 : a*Rp + b*Rc <= v}.
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import get_settings
from app.core.exceptions import PreconditionError, UnboundedRegionError
from app.models.region import LinearRateConstraint, RatePolytope

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

DEDUPE_DISTANCE = 1e-9
BISECTION_RESOLUTION_BITS = 1e-6


def _scaled_tol(tol: float, rhs: float) -> float:
    return tol * max(1.0, abs(rhs))


def is_empty(P: RatePolytope, tol: Optional[float] = None) -> bool:
    """Nonnegative coefficients make the region empty iff some rhs is negative."""
    tol = get_settings().vertex_tolerance if tol is None else tol
    return any(c.rhs < -tol for c in P.constraints)


def _require_bounded(P: RatePolytope) -> None:
    if not any(c.coeff_p > 0 for c in P.constraints):
        raise UnboundedRegionError(f"Region '{P.name}' has no bound on Rp")
    if not any(c.coeff_c > 0 for c in P.constraints):
        raise UnboundedRegionError(f"Region '{P.name}' has no bound on Rc")


def contains(P: RatePolytope, pt: Sequence[float], tol: Optional[float] = None) -> bool:
    """
    Check pt against every constraint and the quadrant, within tol.

    Example:
        >>> box = RatePolytope.of([LinearRateConstraint(1, 0, 1), LinearRateConstraint(0, 1, 1)])
        >>> contains(box, (0.5, 0.5))
        True
    """
    tol = get_settings().containment_tolerance_bits if tol is None else tol
    if tol < 0:
        raise PreconditionError("tol must be nonnegative")
    if pt[0] < -tol or pt[1] < -tol:
        return False
    return all(c.value_at(pt) <= c.rhs + tol for c in P.constraints)


def vertices2d(P: RatePolytope, tol: Optional[float] = None) -> List[Point]:
    """
    Vertices of a bounded rate polytope in counterclockwise order.

    The list starts at the vertex minimizing (Rp + Rc, Rc), which is the
    origin for any nonempty region. An empty region yields [].

    Raises:
        UnboundedRegionError: no constraint bounds Rp or no constraint bounds Rc
    """
    _require_bounded(P)
    tol = get_settings().vertex_tolerance if tol is None else tol
    if is_empty(P, tol):
        return []

    # Rp >= 0 and Rc >= 0 enter as -Rp <= 0 and -Rc <= 0.
    lines = [(c.coeff_p, c.coeff_c, c.rhs) for c in P.constraints]
    lines += [(-1.0, 0.0, 0.0), (0.0, -1.0, 0.0)]

    points: List[Point] = []
    for (a1, b1, r1), (a2, b2, r2) in combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if abs(det) < 1e-14:
            continue
        x = (r1 * b2 - r2 * b1) / det
        y = (a1 * r2 - a2 * r1) / det
        if x < -tol or y < -tol:
            continue
        if all(a * x + b * y <= r + _scaled_tol(tol, r) for a, b, r in lines):
            points.append((x if x > 0 else 0.0, y if y > 0 else 0.0))

    unique: List[Point] = []
    for pt in points:
        if all(math.dist(pt, q) > DEDUPE_DISTANCE for q in unique):
            unique.append(pt)

    cx = sum(p[0] for p in unique) / len(unique)
    cy = sum(p[1] for p in unique) / len(unique)
    ordered = sorted(unique, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    start = min(range(len(ordered)), key=lambda i: (ordered[i][0] + ordered[i][1], ordered[i][1]))
    return ordered[start:] + ordered[:start]


def redundant_constraints(P: RatePolytope, tol: Optional[float] = None) -> List[LinearRateConstraint]:
    """Constraints that touch no vertex of the region."""
    tol = get_settings().containment_tolerance_bits if tol is None else tol
    vertices = vertices2d(P)
    if not vertices:
        return []
    return [
        c for c in P.constraints
        if max(c.value_at(v) for v in vertices) < c.rhs - _scaled_tol(tol, c.rhs)
    ]


def region_contains(outer: RatePolytope, inner: RatePolytope, tol: Optional[float] = None) -> bool:
    """inner ⊆ outer, checked on the vertices of inner."""
    return all(contains(outer, v, tol) for v in vertices2d(inner))


# =============================================================================
# Support functions
# =============================================================================

def support_directions(count: Optional[int] = None) -> np.ndarray:
    """Unit directions at angles k*(pi/2)/(count-1), k = 0..count-1."""
    count = get_settings().support_directions if count is None else count
    angles = np.linspace(0.0, math.pi / 2, count)
    return np.column_stack([np.cos(angles), np.sin(angles)])


def support(P: RatePolytope, directions: np.ndarray) -> np.ndarray:
    """max over the region of d . x for every row d of `directions`."""
    vertices = vertices2d(P)
    if not vertices:
        return np.full(len(directions), -np.inf)
    return np.max(directions @ np.array(vertices).T, axis=1)


def support_deviation(A: RatePolytope, B: RatePolytope, count: Optional[int] = None) -> float:
    """Largest absolute support-function difference over the quadrant directions."""
    directions = support_directions(count)
    return float(np.max(np.abs(support(A, directions) - support(B, directions))))


def support_excess(A: RatePolytope, B: RatePolytope, count: Optional[int] = None) -> float:
    """Largest amount by which A reaches beyond B (0 when A ⊆ B)."""
    directions = support_directions(count)
    return max(0.0, float(np.max(support(A, directions) - support(B, directions))))


def set_equal(A: RatePolytope, B: RatePolytope, tol: Optional[float] = None) -> bool:
    """
    Compare two regions by their support functions.

    Example:
        >>> set_equal(box, box.with_constraints([LinearRateConstraint(1, 1, 5)]))
        True
    """
    tol = get_settings().support_tolerance_bits if tol is None else tol
    return support_deviation(A, B) <= tol


# =============================================================================
# Constant-gap shift
# =============================================================================

@dataclass(frozen=True)
class GapResult:
    """Gap in bits with the outer vertex and inner constraint that set it."""
    gap: float
    binding_vertex: Optional[Point] = None
    binding_label: Optional[str] = None


def _min_shift(point: Point, constraint: LinearRateConstraint) -> float:
    """Smallest g >= 0 with coeff_p*[p-g]^+ + coeff_c*[c-g]^+ <= rhs."""
    terms = [(x, w) for x, w in zip(point, constraint.weights) if w > 0 and x > 0]
    r = constraint.rhs
    if sum(w * x for x, w in terms) <= r:
        return 0.0

    breakpoints = sorted({0.0} | {x for x, _ in terms})
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        active = [(x, w) for x, w in terms if x >= hi]
        weight = sum(w for _, w in active)
        total = sum(w * x for x, w in active)
        if total - weight * hi <= r:
            return min(max((total - r) / weight, lo), hi)
    return breakpoints[-1]


def _gap_exact(outer_vertices: List[Point], inner: RatePolytope) -> GapResult:
    best = GapResult(gap=0.0)
    for v in outer_vertices:
        for constraint in inner.constraints:
            g = _min_shift(v, constraint)
            if g > best.gap:
                best = GapResult(gap=g, binding_vertex=v, binding_label=constraint.label)
    return best


def _gap_bisection(outer_vertices: List[Point], inner: RatePolytope) -> GapResult:
    tol = get_settings().containment_tolerance_bits
    best = GapResult(gap=0.0)
    for v in outer_vertices:
        if contains(inner, v, tol):
            continue
        lo, hi = 0.0, max(v)
        while hi - lo > BISECTION_RESOLUTION_BITS:
            mid = 0.5 * (lo + hi)
            if contains(inner, (max(v[0] - mid, 0.0), max(v[1] - mid, 0.0)), tol):
                hi = mid
            else:
                lo = mid
        if hi > best.gap:
            best = GapResult(gap=hi, binding_vertex=v)
    return best


def gap_with_binding(outer: RatePolytope, inner: RatePolytope, method: str = "exact") -> GapResult:
    """
    Minimal g >= 0 with ([Rp-g]^+, [Rc-g]^+) in inner for every outer vertex.

    Args:
        outer: Outer region (bounded)
        inner: Inner region (bounded, nonempty)
        method: "exact" solves the clamped shift per (vertex, constraint);
            "bisection" searches g to BISECTION_RESOLUTION_BITS

    Raises:
        PreconditionError: empty inner region or unknown method
    """
    if is_empty(inner):
        raise PreconditionError(f"Inner region '{inner.name}' is empty")
    outer_vertices = vertices2d(outer)
    _require_bounded(inner)

    if method == "exact":
        return _gap_exact(outer_vertices, inner)
    if method == "bisection":
        return _gap_bisection(outer_vertices, inner)
    raise PreconditionError(f"Unknown gap method '{method}'")


def gap_to_within(outer: RatePolytope, inner: RatePolytope, method: str = "exact") -> float:
    """Gap in bits between outer and inner. See gap_with_binding."""
    return gap_with_binding(outer, inner, method).gap


def origin_region(name: str = "origin") -> RatePolytope:
    """The region {(0, 0)}."""
    return RatePolytope.of(
        [LinearRateConstraint(1, 0, 0.0, label="origin_p"), LinearRateConstraint(0, 1, 0.0, label="origin_c")],
        name=name,
    )
