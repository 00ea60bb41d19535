"""
Vertex-enumeration oracle for projections.

Enumerates every vertex of a small half-space system by solving all
d-subsets of rows, projects the feasible ones and takes their convex hull.
Used to cross-check fme_project.
"""

import logging
from itertools import combinations, islice
from typing import List, Sequence

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError

from app.core.config import get_settings
from app.core.exceptions import DimensionTooLargeError, GeometryError, InfeasibleSystemError, PreconditionError
from app.models.region import HPolyhedron, LinearRateConstraint, RatePolytope

logger = logging.getLogger(__name__)

BOX_FLAG = "box_bounded"
DEGENERATE_FLAG = "degenerate_hull"
CHUNK_SIZE = 50_000
DET_THRESHOLD = 1e-12
NORMAL_EPS = 1e-9


def _box_rows(A: np.ndarray, b: np.ndarray, box: float):
    """Box rows for the directions in which A x <= b is unbounded."""
    d = A.shape[1]
    extra_A, extra_b = [], []
    for i in range(d):
        for sign in (1.0, -1.0):
            objective = np.zeros(d)
            objective[i] = -sign
            result = linprog(objective, A_ub=A, b_ub=b, bounds=[(-box, box)] * d, method="highs")
            if result.status == 2:
                raise InfeasibleSystemError("Half-space system is empty")
            if result.status != 0:
                raise GeometryError(f"Boundedness LP failed: {result.message}")
            if -result.fun >= box * (1 - 1e-9):
                row = np.zeros(d)
                row[i] = sign
                extra_A.append(row)
                extra_b.append(box)
    return extra_A, extra_b


def enumerate_vertices(A: np.ndarray, b: np.ndarray, tol: float) -> np.ndarray:
    """All feasible points where d linearly independent rows are tight."""
    m, d = A.shape
    found = []
    subsets = combinations(range(m), d)
    while True:
        chunk = list(islice(subsets, CHUNK_SIZE))
        if not chunk:
            break
        idx = np.array(chunk)
        As = A[idx]
        bs = b[idx]
        dets = np.linalg.det(As)
        ok = np.abs(dets) > DET_THRESHOLD
        if not np.any(ok):
            continue
        xs = np.linalg.solve(As[ok], bs[ok][..., None])[..., 0]
        slack = xs @ A.T - b[None, :]
        feasible = np.all(slack <= tol * np.maximum(1.0, np.abs(b))[None, :], axis=1)
        if np.any(feasible):
            found.append(xs[feasible])
    if not found:
        return np.zeros((0, d))
    return np.vstack(found)


def hull_polytope(points: np.ndarray, name: str = "", flags: Sequence[str] = ()) -> RatePolytope:
    """
    Down-closed rate polytope spanned by 2-D points.

    Facets whose outward normal has a negative component are dropped
    (the quadrant takes their place). Collinear or single-point sets fall
    back to the bounding box.
    """
    flags = set(flags)
    unique = np.unique(np.round(points, 9), axis=0)
    constraints: List[LinearRateConstraint] = []
    try:
        if len(unique) < 3:
            raise QhullError("fewer than three points")
        hull = ConvexHull(unique)
        for k, eq in enumerate(hull.equations):
            normal, offset = eq[:2], eq[2]
            if np.any(normal < -NORMAL_EPS):
                continue
            normal = np.clip(normal, 0.0, None)
            if np.max(normal) <= NORMAL_EPS:
                continue
            scale = float(np.max(normal))
            constraints.append(
                LinearRateConstraint(normal[0] / scale, normal[1] / scale, -offset / scale, label=f"hull{k}")
            )
    except QhullError:
        flags.add(DEGENERATE_FLAG)
        constraints = []

    if not any(c.coeff_p > 0 for c in constraints) or not any(c.coeff_c > 0 for c in constraints):
        if DEGENERATE_FLAG not in flags:
            flags.add(DEGENERATE_FLAG)
        constraints = [
            LinearRateConstraint(1, 0, float(max(unique[:, 0].max(), 0.0)), label="box_p"),
            LinearRateConstraint(0, 1, float(max(unique[:, 1].max(), 0.0)), label="box_c"),
        ]
    return RatePolytope.of(constraints, name=name, flags=flags)


def project_by_vertices(H: HPolyhedron, keep: Sequence[str]) -> RatePolytope:
    """
    Project H onto two kept variables through its vertices.

    Args:
        H: Half-space system (bounded after box rows)
        keep: Labels of the (Rp, Rc) coordinates, in that order

    Raises:
        DimensionTooLargeError: H has more than MAX_VERTEX_DIMENSION variables
        InfeasibleSystemError: no feasible vertex

    Example:
        >>> H = HPolyhedron.from_dicts(["x", "y", "z"], [({"x": 1, "y": 1, "z": 1}, 1, None)] + nonneg)
        >>> project_by_vertices(H, ["x", "y"]).constraints[0].weights
        (1.0, 1.0)
    """
    settings = get_settings()
    if len(keep) != 2:
        raise PreconditionError("project_by_vertices keeps exactly two coordinates")
    if H.dimension > settings.max_vertex_dimension:
        raise DimensionTooLargeError(
            f"{H.dimension} variables exceed the vertex-enumeration limit {settings.max_vertex_dimension}"
        )
    cols = [H.index(v) for v in keep]

    A, b = H.as_arrays()
    extra_A, extra_b = _box_rows(A, b, settings.box_bound_bits)
    flags = set(H.flags)
    if extra_A:
        flags.add(BOX_FLAG)
        logger.warning(f"⚠️ System unbounded in {len(extra_A)} directions; added box rows")
        A = np.vstack([A] + extra_A)
        b = np.concatenate([b, extra_b])

    vertices = enumerate_vertices(A, b, settings.containment_tolerance_bits)
    if len(vertices) == 0:
        raise InfeasibleSystemError("No feasible vertex")
    logger.debug(f"📊 {len(vertices)} vertices over {H.dimension} variables")
    return hull_polytope(vertices[:, cols], name="vertex_projection", flags=flags)
