"""
Certification: gap sweeps, constraint ledgers, gDoF estimates, reference
comparisons and the FME cross-check.
"""

from .error_tracker import ErrorSummary, PointError, StageError, SweepErrorTracker
from .fme_check import FmeCheckResult, FmeTrial, run_fme_check, run_fme_trial
from .gap_sweep import GapSweepOrchestrator, GapSweepResult, certify_gap_sweep, certify_point
from .gdof import GdofCurve, gdof_estimate
from .grid import GridSpec, parse_axis
from .ledger import constraint_ledger
from .reference import ReferenceComparison, reference_comparison, reference_comparison_gains
from .report_writer import OutputMeta, RecordSanitizer, ReportWriter

__all__ = [
    "SweepErrorTracker",
    "PointError",
    "StageError",
    "ErrorSummary",
    "GridSpec",
    "parse_axis",
    "certify_point",
    "certify_gap_sweep",
    "GapSweepOrchestrator",
    "GapSweepResult",
    "constraint_ledger",
    "GdofCurve",
    "gdof_estimate",
    "ReferenceComparison",
    "reference_comparison",
    "reference_comparison_gains",
    "FmeTrial",
    "FmeCheckResult",
    "run_fme_trial",
    "run_fme_check",
    "OutputMeta",
    "RecordSanitizer",
    "ReportWriter",
]
