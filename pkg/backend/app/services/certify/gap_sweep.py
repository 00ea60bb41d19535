"""
Gap Sweep Orchestrator.

Certifies the per-regime constant gaps over an (S, alpha, beta) grid.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import get_settings
from app.core.exceptions import CCICError
from app.models.channel import Regime, SymmetricParams
from app.models.region import RatePolytope
from app.models.reports import GapReport
from app.services.certify.error_tracker import SweepErrorTracker
from app.services.channel import classify_by_threshold, classify_regime, require_snr_above_one
from app.services.inner_bounds import blue_substitute_region, inner_regime, substitute_budget, time_shared_region
from app.services.outer_bounds import outer_regime, outer_symmetric
from app.services.polytope import gap_with_binding, is_empty, origin_region

logger = logging.getLogger(__name__)

GridPoint = Tuple[float, float, float]

TIME_SHARED_REGIMES = (Regime.YELLOW, Regime.BLUE_STRONG_COOPERATION)


@dataclass(frozen=True)
class PointRegions:
    """Regions a grid point is certified with."""
    regime: Regime
    evaluated_as: Regime
    outer: RatePolytope
    inner: RatePolytope
    budget: float
    external: bool


def point_key(S: float, alpha: float, beta: float) -> str:
    return f"S={S:.6g} alpha={alpha:g} beta={beta:g}"


def classify_point(S: float, alpha: float, beta: float) -> Tuple[Regime, Regime]:
    """Exponent-level regime (reported) and absolute-level regime (evaluated)."""
    params = SymmetricParams(S=S, alpha=alpha, beta=beta)
    regime = classify_regime(params)
    return regime, classify_by_threshold(S, params.inr, params.coop)


def certification_inner(S: float, I: float, C: float, evaluated_as: Regime, time_share: bool = True) -> RatePolytope:
    """
    Achievable region a point is held to.

    Blue classes use their substitute region. Yellow and strong cooperation
    are time-shared with the single-user corners (see time_shared_region).
    """
    if evaluated_as.is_blue:
        inner = blue_substitute_region(S, I, C, evaluated_as)
    else:
        inner = inner_regime(S, I, C, evaluated_as)
    if time_share and evaluated_as in TIME_SHARED_REGIMES:
        inner = time_shared_region(inner, S)
    return inner


def point_regions(
    S: float,
    alpha: float,
    beta: float,
    regime: Regime,
    evaluated_as: Regime,
    substitute_empty: bool = True,
    time_share: bool = True,
) -> PointRegions:
    """
    Outer and inner regions for one point.

    Blue points are compared against outer_symmetric with their substitute
    inner region and substitute budget. With substitute_empty an empty
    inner region is replaced by the origin; time_share=False keeps the
    printed region as is.
    """
    params = SymmetricParams(S=S, alpha=alpha, beta=beta)
    I, C = params.inr, params.coop
    external = regime.is_blue or evaluated_as.is_blue

    if evaluated_as.is_blue:
        outer = outer_symmetric(S, I, C)
    else:
        outer = outer_regime(S, I, C, evaluated_as)
    inner = certification_inner(S, I, C, evaluated_as, time_share=time_share)

    if substitute_empty and is_empty(inner):
        logger.debug(f"⚠️ {inner.name} empty at {point_key(S, alpha, beta)}, using the origin")
        inner = origin_region(name=f"origin_{inner.name}")

    return PointRegions(
        regime=regime,
        evaluated_as=evaluated_as,
        outer=outer,
        inner=inner,
        budget=substitute_budget(evaluated_as),
        external=external,
    )


def build_report(S: float, alpha: float, beta: float, regions: PointRegions, gap_tol: float) -> GapReport:
    result = gap_with_binding(regions.outer, regions.inner)
    return GapReport(
        S=S,
        alpha=alpha,
        beta=beta,
        regime=regions.regime,
        evaluated_as=regions.evaluated_as,
        gap=result.gap,
        budget=regions.budget,
        certified=result.gap <= regions.budget + gap_tol,
        binding_vertex=result.binding_vertex,
        external=regions.external,
    )


def certify_point(S: float, alpha: float, beta: float, gap_tol: Optional[float] = None) -> GapReport:
    """
    Certify one grid point.

    Example:
        >>> certify_point(1e4, 0.5, 1.2).evaluated_as
        <Regime.YELLOW: 'Yellow'>
    """
    gap_tol = get_settings().gap_tolerance_bits if gap_tol is None else gap_tol
    regime, evaluated_as = classify_point(S, alpha, beta)
    regions = point_regions(S, alpha, beta, regime, evaluated_as)
    return build_report(S, alpha, beta, regions, gap_tol)


@dataclass
class GapSweepResult:
    """Result of a gap sweep."""
    status: str
    reports: List[GapReport]
    points: int
    failures: int
    max_gap: float
    message: str
    errors: List[str] = field(default_factory=list)

    @property
    def is_success(self) -> bool:
        """Every point evaluated and certified."""
        return self.status == "success" and self.failures == 0 and len(self.errors) == 0

    @property
    def is_partial_success(self) -> bool:
        return self.status in ["success", "partial_success"] and len(self.errors) > 0

    @property
    def max_gap_by_regime(self) -> Dict[Regime, float]:
        """Largest gap per evaluated regime, Blue points excluded."""
        result: Dict[Regime, float] = {}
        for report in self.reports:
            if report.external:
                continue
            result[report.evaluated_as] = max(result.get(report.evaluated_as, 0.0), report.gap)
        return result


class GapSweepOrchestrator:
    """
    Orchestrates a gap sweep.

    Responsibilities:
    - Validate the grid
    - Evaluate points (optionally on a thread pool) in grid order
    - Track per-point errors by phase
    - Aggregate the certification outcome
    """

    def __init__(self, workers: Optional[int] = None, gap_tol: Optional[float] = None):
        settings = get_settings()
        self.workers = max(1, settings.sweep_workers if workers is None else workers)
        self.gap_tol = settings.gap_tolerance_bits if gap_tol is None else gap_tol
        self.error_tracker = SweepErrorTracker()

    def run(self, points: Sequence[GridPoint]) -> GapSweepResult:
        """
        Execute the sweep.

        Args:
            points: (S, alpha, beta) triples, S in linear scale

        Raises:
            PreconditionError: some S <= 1
        """
        logger.info(f"🚀 Gap sweep: {len(points)} points, {self.workers} worker(s)")
        self.error_tracker.clear()

        # === PHASE 1: Validate Grid ===
        for S, _, _ in points:
            require_snr_above_one(S)

        # === PHASE 2: Evaluate Points ===
        try:
            if self.workers > 1:
                with ThreadPoolExecutor(max_workers=self.workers) as pool:
                    outcomes = list(pool.map(self._evaluate, points))
            else:
                outcomes = [self._evaluate(point) for point in points]
        except Exception as e:
            # Not a CCICError: the stage itself is broken, no point is trusted.
            self.error_tracker.track_stage_error("evaluate", len(points), e, {"workers": self.workers})
            outcomes = []

        # === PHASE 3: Collect Errors ===
        reports: List[GapReport] = []
        for point, (report, failure) in zip(points, outcomes):
            if failure is not None:
                phase, error = failure
                self.error_tracker.track_point_error(point_key(*point), phase, error)
                continue
            reports.append(report)

        # === PHASE 4: Build Result ===
        return self._build_result(reports, len(points))

    def _evaluate(self, point: GridPoint) -> Tuple[Optional[GapReport], Optional[Tuple[str, Exception]]]:
        S, alpha, beta = point
        phase = "classify"
        try:
            regime, evaluated_as = classify_point(S, alpha, beta)
            phase = "regions"
            regions = point_regions(S, alpha, beta, regime, evaluated_as)
            phase = "gap"
            report = build_report(S, alpha, beta, regions, self.gap_tol)
        except CCICError as e:
            return None, (phase, e)

        logger.debug(
            f"{point_key(S, alpha, beta)}: {report.evaluated_as.value} gap={report.gap:.4f} "
            f"budget={report.budget:g} certified={report.certified}"
        )
        return report, None

    def _build_result(self, reports: List[GapReport], points: int) -> GapSweepResult:
        summary = self.error_tracker.get_summary()
        failures = sum(1 for r in reports if r.counts_as_failure)
        certified_gaps = [r.gap for r in reports if not r.external]
        max_gap = max(certified_gaps, default=0.0)

        if summary.has_errors:
            status = "partial_success" if reports else "failed"
        else:
            status = "success"

        message = (
            f"Certified {len(reports) - failures}/{len(reports)} points "
            f"({sum(1 for r in reports if r.external)} external), max gap {max_gap:.4f} bits"
        )
        if failures:
            logger.warning(f"⚠️ {failures} point(s) exceed their budget")
        if summary.total_point_errors:
            logger.warning(f"⚠️ {summary.total_point_errors} point(s) could not be evaluated")
        if summary.total_stage_errors:
            logger.warning(f"⚠️ {summary.total_stage_errors} stage(s) failed")
        logger.info(f"📊 {message}")

        return GapSweepResult(
            status=status,
            reports=reports,
            points=points,
            failures=failures,
            max_gap=max_gap,
            message=message,
            errors=summary.get_error_messages(),
        )


def certify_gap_sweep(
    S_list: Sequence[float],
    alpha_list: Sequence[float],
    beta_list: Sequence[float],
    workers: Optional[int] = None,
) -> List[GapReport]:
    """
    Certify every (S, alpha, beta) combination in grid order.

    Points that cannot be evaluated are logged and left out; use
    GapSweepOrchestrator directly for the error summary.

    Raises:
        PreconditionError: some S <= 1
    """
    points = [(S, a, b) for S in S_list for a in alpha_list for b in beta_list]
    return GapSweepOrchestrator(workers=workers).run(points).reports
