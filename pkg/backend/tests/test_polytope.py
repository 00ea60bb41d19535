"""
Tests for the polytope engine: planar geometry, Fourier-Motzkin projection
and the vertex-enumeration oracle.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from app.core.exceptions import (
    DimensionTooLargeError,
    InfeasibleSystemError,
    PreconditionError,
    UnboundedRegionError,
)
from app.models.region import HPolyhedron, LinearRateConstraint, RatePolytope
from app.services.polytope import (
    contains,
    fme_project,
    gap_to_within,
    gap_with_binding,
    hull_polytope,
    is_empty,
    origin_region,
    project_by_vertices,
    redundant_constraints,
    region_contains,
    set_equal,
    support_deviation,
    support_excess,
    to_rate_polytope,
    vertices2d,
)
from app.services.polytope.oracle import BOX_FLAG, DEGENERATE_FLAG


def box(p: float, c: float, name: str = "box") -> RatePolytope:
    return RatePolytope.of(
        [LinearRateConstraint(1, 0, p, label="p"), LinearRateConstraint(0, 1, c, label="c")],
        name=name,
    )


def triangle(total: float) -> RatePolytope:
    return RatePolytope.of(
        [
            LinearRateConstraint(1, 0, total, label="p"),
            LinearRateConstraint(0, 1, total, label="c"),
            LinearRateConstraint(1, 1, total, label="sum"),
        ],
        name="triangle",
    )


def random_rate_system(rng: np.random.Generator, rows: int = 6) -> HPolyhedron:
    """Split rates u1, u2 (user 1) and v1, v2 (user 2), rewritten over R1, R2."""
    splits = ("u1", "u2", "v1", "v2")
    sparse = [({v: -1}, 0.0, f"nonneg_{v}") for v in splits]
    sparse += [({v: 1}, 5.0, f"cap_{v}") for v in splits]
    for k in range(rows):
        coeffs = rng.integers(0, 3, size=len(splits))
        if not coeffs.any():
            coeffs[k % len(splits)] = 1
        sparse.append(({v: int(a) for v, a in zip(splits, coeffs) if a}, float(rng.uniform(1, 6)), f"row{k}"))
    H = HPolyhedron.from_dicts(splits, sparse)
    H = H.substitute("u1", {"R1": 1, "u2": -1})
    return H.substitute("v1", {"R2": 1, "v2": -1})


# =============================================================================
# Planar geometry
# =============================================================================

class TestVertices2d:
    """Tests for vertices2d."""

    def test_unit_box(self):
        """Counterclockwise from the origin."""
        assert vertices2d(box(1, 1)) == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]

    def test_no_negative_zero(self):
        """Axis vertices carry +0.0, never -0.0."""
        P = RatePolytope.of(
            [
                LinearRateConstraint(1, 0, 1),
                LinearRateConstraint(0, 1, 1),
                LinearRateConstraint(1, 1, 1.5),
                LinearRateConstraint(1, 1, 1.0 + 1e-12),
            ]
        )
        coords = [v for pt in vertices2d(box(1, 1)) + vertices2d(P) for v in pt]
        assert all(math.copysign(1.0, v) == 1.0 for v in coords)

    def test_redundant_constraint_adds_no_vertex(self):
        """A loose sum bound leaves the box unchanged."""
        P = box(1, 1).with_constraints([LinearRateConstraint(1, 1, 5, label="loose")])
        assert len(vertices2d(P)) == 4

    def test_empty_region(self):
        """A negative rhs empties the region."""
        P = box(1, -1)
        assert is_empty(P)
        assert vertices2d(P) == []

    def test_unbounded(self):
        """No bound on Rc."""
        P = RatePolytope.of([LinearRateConstraint(1, 0, 1)])
        with pytest.raises(UnboundedRegionError):
            vertices2d(P)

    def test_vertices_feasible(self):
        """Every vertex of a pentagon satisfies every constraint."""
        P = RatePolytope.of(
            [
                LinearRateConstraint(1, 0, 3),
                LinearRateConstraint(0, 1, 2),
                LinearRateConstraint(1, 1, 4),
                LinearRateConstraint(2, 1, 7),
            ]
        )
        vertices = vertices2d(P)
        assert all(contains(P, v) for v in vertices)
        assert (3.0, 1.0) in vertices
        assert (2.0, 2.0) in vertices


class TestContainment:
    """Tests for contains, region_contains and redundant_constraints."""

    def test_contains(self):
        """Interior, exterior and negative points."""
        P = box(1, 1)
        assert contains(P, (0.5, 0.5))
        assert not contains(P, (1.5, 0.5))
        assert not contains(P, (-0.1, 0.0))

    def test_contains_tolerance(self):
        """Points just outside pass with a loose tolerance."""
        assert contains(box(1, 1), (1.0 + 1e-8, 0.5), tol=1e-7)

    def test_negative_tolerance(self):
        """Tolerances are nonnegative."""
        with pytest.raises(PreconditionError):
            contains(box(1, 1), (0.5, 0.5), tol=-1.0)

    def test_region_contains(self):
        """Smaller box inside the larger."""
        assert region_contains(box(2, 2), box(1, 1))
        assert not region_contains(box(1, 1), box(2, 2))

    def test_redundant_constraints(self):
        """The loose sum bound is reported."""
        loose = LinearRateConstraint(1, 1, 5, label="loose")
        P = box(1, 1).with_constraints([loose])
        assert redundant_constraints(P) == [loose]


class TestSupport:
    """Tests for support-function comparisons."""

    def test_redundant_constraint_equal(self):
        """Appending a redundant constraint keeps the set."""
        assert set_equal(box(1, 1), box(1, 1).with_constraints([LinearRateConstraint(1, 1, 5)]))

    def test_tiny_perturbation_equal(self):
        """rhs 1 + 1e-9 is equal at tol 1e-7."""
        assert set_equal(box(1, 1), box(1 + 1e-9, 1), tol=1e-7)

    def test_triangle_differs(self):
        """Rp + Rc <= 2 reaches further along (1, 0)."""
        assert not set_equal(box(1, 1), triangle(2))

    def test_excess_is_one_sided(self):
        """A subset has no excess over its superset."""
        assert support_excess(box(1, 1), box(2, 2)) == 0.0
        assert support_excess(box(2, 2), box(1, 1)) > 0.9

    def test_deviation_symmetric(self):
        """Deviation does not depend on argument order."""
        assert support_deviation(box(1, 2), triangle(2)) == pytest.approx(support_deviation(triangle(2), box(1, 2)))


class TestGap:
    """Tests for gap_to_within and gap_with_binding."""

    def test_identical_regions(self):
        """A region is within 0 bits of itself."""
        assert gap_to_within(triangle(3), triangle(3)) == 0.0

    def test_scaled_box(self):
        """2x2 box against the unit box."""
        result = gap_with_binding(box(2, 2), box(1, 1))
        assert result.gap == pytest.approx(1.0)
        assert result.binding_vertex is not None
        assert result.binding_label in ("p", "c")

    def test_box_against_triangle(self):
        """(1, 1) must move to (0.5, 0.5)."""
        assert gap_to_within(box(1, 1), triangle(1)) == pytest.approx(0.5)

    def test_clamped_shift(self):
        """The small coordinate clamps at zero before the sum bound is met."""
        outer = box(3, 0.5)
        inner = RatePolytope.of([LinearRateConstraint(1, 1, 1), LinearRateConstraint(1, 0, 5), LinearRateConstraint(0, 1, 5)])
        assert gap_to_within(outer, inner) == pytest.approx(2.0)

    def test_bisection_agrees(self):
        """Bisection reproduces the exact gap to its resolution."""
        outer = RatePolytope.of([LinearRateConstraint(1, 0, 4), LinearRateConstraint(0, 1, 3), LinearRateConstraint(2, 1, 9)])
        inner = RatePolytope.of([LinearRateConstraint(1, 0, 2), LinearRateConstraint(0, 1, 2), LinearRateConstraint(1, 2, 4)])
        exact = gap_to_within(outer, inner)
        assert gap_to_within(outer, inner, method="bisection") == pytest.approx(exact, abs=1e-5)

    def test_monotone_in_inner(self):
        """Shrinking the inner region never decreases the gap."""
        outer = box(3, 3)
        gaps = [gap_to_within(outer, triangle(t)) for t in (3.0, 2.5, 2.0, 1.0)]
        assert gaps == sorted(gaps)

    def test_origin_inner(self):
        """The gap to the origin is the largest outer coordinate."""
        assert gap_to_within(box(1.5, 0.7), origin_region()) == pytest.approx(1.5)

    def test_empty_inner_rejected(self):
        """An empty inner region has no finite gap."""
        with pytest.raises(PreconditionError):
            gap_to_within(box(1, 1), box(1, -1))

    def test_unknown_method(self):
        """Only exact and bisection exist."""
        with pytest.raises(PreconditionError):
            gap_to_within(box(1, 1), box(1, 1), method="newton")


# =============================================================================
# Fourier-Motzkin and the vertex oracle
# =============================================================================

class TestFmeProject:
    """Tests for fme_project and to_rate_polytope."""

    def test_single_elimination(self):
        """x <= z <= 3 and z >= 1 project to x <= 3."""
        H = HPolyhedron.from_dicts(
            ["x", "z"],
            [({"z": 1}, 3, "a"), ({"z": -1}, -1, "b"), ({"x": 1, "z": -1}, 0, "c")],
        )
        projected = fme_project(H, ["z"])
        assert projected.variables == ("x",)
        assert len(projected.rows) == 1
        assert projected.rows[0].coeffs == (Fraction(1),)
        assert projected.rows[0].rhs == pytest.approx(3.0)

    def test_contradiction(self):
        """z <= 1 and z >= 2 cannot both hold."""
        H = HPolyhedron.from_dicts(["x", "z"], [({"z": 1}, 1, "a"), ({"z": -1}, -2, "b"), ({"x": 1}, 1, "c")])
        with pytest.raises(InfeasibleSystemError):
            fme_project(H, ["z"])

    def test_unknown_variable(self):
        """Only existing variables can be eliminated."""
        H = HPolyhedron.from_dicts(["x"], [({"x": 1}, 1, "a")])
        with pytest.raises(PreconditionError):
            fme_project(H, ["y"])

    def test_matches_vertex_oracle(self, rng):
        """Both projections agree on random rate systems."""
        for _ in range(100):
            H = random_rate_system(rng)
            fme = to_rate_polytope(fme_project(H, ["u2", "v2"]), name="fme")
            oracle = project_by_vertices(H, ["R1", "R2"])
            assert support_deviation(fme, oracle) <= 1e-7

    def test_elimination_order(self, rng):
        """Permuting the elimination order keeps the projected set."""
        for _ in range(20):
            H = random_rate_system(rng)
            a = to_rate_polytope(fme_project(H, ["u2", "v2"]))
            b = to_rate_polytope(fme_project(H, ["v2", "u2"]))
            assert support_deviation(a, b) <= 1e-9

    def test_without_pruning(self, rng):
        """Pruning only removes implied rows."""
        H = random_rate_system(rng)
        pruned = to_rate_polytope(fme_project(H, ["u2", "v2"]))
        raw = to_rate_polytope(fme_project(H, ["u2", "v2"], prune=False))
        assert set_equal(pruned, raw)
        assert len(pruned.constraints) <= len(raw.constraints)

    def test_to_rate_polytope_needs_two_variables(self):
        """Only (Rp, Rc) systems convert."""
        H = HPolyhedron.from_dicts(["x"], [({"x": 1}, 1, "a")])
        with pytest.raises(PreconditionError):
            to_rate_polytope(H)


class TestVertexOracle:
    """Tests for project_by_vertices and hull_polytope."""

    def test_simplex(self):
        """x + y + z <= 1 projects to the triangle."""
        nonneg = [({v: -1}, 0, f"n{v}") for v in "xyz"]
        H = HPolyhedron.from_dicts(["x", "y", "z"], [({"x": 1, "y": 1, "z": 1}, 1, "s")] + nonneg)
        P = project_by_vertices(H, ["x", "y"])
        assert set_equal(P, triangle(1))

    def test_unbounded_direction_flagged(self):
        """z has no upper bound; a box row is added and flagged."""
        nonneg = [({v: -1}, 0, f"n{v}") for v in "xyz"]
        H = HPolyhedron.from_dicts(["x", "y", "z"], [({"x": 1}, 1, "a"), ({"y": 1}, 1, "b")] + nonneg)
        P = project_by_vertices(H, ["x", "y"])
        assert BOX_FLAG in P.flags
        assert set_equal(P, box(1, 1))

    def test_dimension_limit(self):
        """More than MAX_VERTEX_DIMENSION variables is refused."""
        names = [f"x{i}" for i in range(11)]
        H = HPolyhedron.from_dicts(names, [({n: 1}, 1, n) for n in names])
        with pytest.raises(DimensionTooLargeError):
            project_by_vertices(H, names[:2])

    def test_degenerate_hull(self):
        """Collinear points fall back to their bounding box."""
        P = hull_polytope(np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]))
        assert DEGENERATE_FLAG in P.flags
        assert P.rhs_of("box_p") == 2.0
