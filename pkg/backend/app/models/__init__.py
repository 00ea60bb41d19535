# Domain models
from .channel import ChannelParams, OuterBoundId, ReferenceKind, Regime, Scheme, SymmetricParams
from .region import HalfSpace, HPolyhedron, LinearRateConstraint, RatePolytope
from .reports import GapReport, LedgerEntry
from .signaling import (
    SPLIT_RATE_VARIABLES,
    DpcCoefficients,
    InnerOptions,
    PowerSplit,
    SplitRateVector,
)

__all__ = [
    "ChannelParams",
    "SymmetricParams",
    "Regime",
    "Scheme",
    "OuterBoundId",
    "ReferenceKind",
    "LinearRateConstraint",
    "RatePolytope",
    "HalfSpace",
    "HPolyhedron",
    "GapReport",
    "LedgerEntry",
    "PowerSplit",
    "SplitRateVector",
    "InnerOptions",
    "DpcCoefficients",
    "SPLIT_RATE_VARIABLES",
]
