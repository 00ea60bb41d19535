"""
Achievable regions for Gaussian signaling: the raw decoding system, the
closed forms after elimination, regime power splits and regions.
"""

from .closed_form import (
    CLOSED_FORM_TABLE,
    REMARK_TABLE,
    closed_form_from_raw,
    exact_k,
    inner_closed_form,
    remark_constraints,
)
from .projection import RATE_VARIABLES, project_inner, rate_projection_system, split_rate_witness
from .raw_system import RAW_ROWS, RawEvaluation, RawRow, evaluate_raw, raw_constraint_system
from .regime import (
    blue_substitute_region,
    compound_mac_region,
    inner_regime,
    power_split_for_regime,
    substitute_budget,
    time_shared_region,
)
from .signal_model import absent_auxiliaries, build_signal_model, dpc_coefficients

__all__ = [
    "RAW_ROWS",
    "RawRow",
    "RawEvaluation",
    "evaluate_raw",
    "raw_constraint_system",
    "build_signal_model",
    "absent_auxiliaries",
    "dpc_coefficients",
    "CLOSED_FORM_TABLE",
    "REMARK_TABLE",
    "inner_closed_form",
    "closed_form_from_raw",
    "remark_constraints",
    "exact_k",
    "power_split_for_regime",
    "inner_regime",
    "compound_mac_region",
    "blue_substitute_region",
    "substitute_budget",
    "time_shared_region",
    "RATE_VARIABLES",
    "rate_projection_system",
    "project_inner",
    "split_rate_witness",
]
