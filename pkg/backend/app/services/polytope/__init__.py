"""
Polytope engine: planar rate regions, Fourier-Motzkin projection and the
vertex-enumeration oracle.
"""

from .fme import fme_project, prune_redundant, to_rate_polytope
from .oracle import enumerate_vertices, hull_polytope, project_by_vertices
from .planar import (
    GapResult,
    contains,
    gap_to_within,
    gap_with_binding,
    is_empty,
    origin_region,
    redundant_constraints,
    region_contains,
    set_equal,
    support,
    support_deviation,
    support_directions,
    support_excess,
    vertices2d,
)

__all__ = [
    "vertices2d",
    "contains",
    "is_empty",
    "redundant_constraints",
    "region_contains",
    "support",
    "support_directions",
    "support_deviation",
    "support_excess",
    "set_equal",
    "GapResult",
    "gap_with_binding",
    "gap_to_within",
    "origin_region",
    "fme_project",
    "prune_redundant",
    "to_rate_polytope",
    "enumerate_vertices",
    "hull_polytope",
    "project_by_vertices",
]
