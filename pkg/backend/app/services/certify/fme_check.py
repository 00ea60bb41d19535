"""
FME cross-check.

Random channels and power splits; the raw achievable system is projected
onto (R1, R2) by Fourier-Motzkin and by vertex enumeration, and the result
is compared with the printed closed form:

  (a) both projections agree (support functions);
  (b) every projection vertex lies in the closed form;
  (c) without common power in E1 (a1 = a2 = 0) the two regions coincide.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from app.core.config import get_settings
from app.core.exceptions import CCICError, InfeasibleSystemError, PreconditionError
from app.models.channel import ChannelParams, Scheme
from app.models.region import RatePolytope
from app.models.signaling import InnerOptions, PowerSplit
from app.services.certify.error_tracker import SweepErrorTracker
from app.services.inner_bounds import evaluate_raw, inner_closed_form, project_inner, remark_constraints
from app.services.polytope import support_deviation, support_excess, vertices2d

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
ERROR = "error"

# Dirichlet concentration for random shares; keeps every share away from 0.
SHARE_CONCENTRATION = 2.0


@dataclass(frozen=True)
class FmeTrial:
    """Outcome of one cross-check trial."""
    trial: int
    scheme: Scheme
    status: str
    oracle_dev: Optional[float] = None
    containment_dev: Optional[float] = None
    closed_form_excess: Optional[float] = None
    exact: bool = False
    reason: str = ""


@dataclass
class FmeCheckResult:
    """Result of a cross-check run."""
    seed: int
    tolerance: float
    trials: List[FmeTrial]
    errors: List[str] = field(default_factory=list)

    def _count(self, status: str) -> int:
        return sum(1 for t in self.trials if t.status == status)

    @property
    def passed(self) -> int:
        return self._count(PASS)

    @property
    def failed(self) -> int:
        return self._count(FAIL) + self._count(ERROR)

    @property
    def skipped(self) -> int:
        return self._count(SKIPPED)

    @property
    def max_deviation(self) -> float:
        """Largest oracle or containment deviation over evaluated trials."""
        devs = [
            d
            for t in self.trials
            for d in (t.oracle_dev, t.containment_dev)
            if d is not None
        ]
        return max(devs, default=0.0)

    @property
    def is_success(self) -> bool:
        return self.failed == 0 and len(self.errors) == 0

    def summary_line(self) -> str:
        evaluated = len(self.trials) - self.skipped
        if self.is_success:
            dev = f"max dev ≤ {self.tolerance:g}"
        else:
            dev = f"max dev {self.max_deviation:.3g} (tol {self.tolerance:g})"
        skipped = f", {self.skipped} skipped" if self.skipped else ""
        return f"{self.passed}/{evaluated} pass{skipped}, {dev}"


def _max_violation(vertices, region: RatePolytope) -> float:
    worst = 0.0
    for v in vertices:
        for c in region.constraints:
            worst = max(worst, c.value_at(v) - c.rhs)
    return worst


def closed_form_for_check(p: ChannelParams, s: PowerSplit, scheme: Scheme, evaluation=None) -> RatePolytope:
    """Printed closed form in the form the projection is compared with."""
    if scheme == Scheme.E1:
        return inner_closed_form(p, s, Scheme.E1)
    closed = inner_closed_form(p, s, Scheme.E2, InnerOptions(exact_k=True))
    return closed.with_constraints(remark_constraints(p, s, evaluation).constraints)


def run_fme_trial(
    trial: int,
    p: ChannelParams,
    s: PowerSplit,
    scheme: Scheme,
    tol: Optional[float] = None,
    fault_offset: float = 0.0,
    exact: Optional[bool] = None,
) -> FmeTrial:
    """
    Cross-check one (channel, split, scheme) draw.

    Args:
        trial: Trial index
        fault_offset: Amount subtracted from every closed-form rhs
        exact: Require set equality; defaults to E1 draws with a1 = a2 = 0
    """
    scheme = Scheme(scheme)
    tol = get_settings().support_tolerance_bits if tol is None else tol
    if exact is None:
        exact = scheme == Scheme.E1 and s.a1_sq == 0 and s.a2_sq == 0

    if scheme == Scheme.E2 and s.c2_sq == 0:
        return FmeTrial(trial, scheme, SKIPPED, exact=exact, reason="no cognitive private message (c2 = 0)")

    evaluation = evaluate_raw(p, s, scheme)
    try:
        fme = project_inner(p, s, scheme, "fme", evaluation)
    except InfeasibleSystemError as e:
        return FmeTrial(trial, scheme, SKIPPED, exact=exact, reason=f"raw system infeasible: {e}")
    oracle = project_inner(p, s, scheme, "vertices", evaluation)

    closed = closed_form_for_check(p, s, scheme, evaluation)
    if fault_offset:
        closed = closed.shifted(-fault_offset)

    oracle_dev = support_deviation(fme, oracle)
    containment_dev = max(0.0, _max_violation(vertices2d(fme), closed))
    excess = support_excess(closed, fme)

    reasons = []
    if oracle_dev > tol:
        reasons.append(f"projections disagree by {oracle_dev:.3g}")
    if containment_dev > tol:
        reasons.append(f"projection leaves the closed form by {containment_dev:.3g}")
    if exact and excess > tol:
        reasons.append(f"closed form exceeds the exact projection by {excess:.3g}")

    return FmeTrial(
        trial=trial,
        scheme=scheme,
        status=FAIL if reasons else PASS,
        oracle_dev=oracle_dev,
        containment_dev=containment_dev,
        closed_form_excess=excess,
        exact=exact,
        reason="; ".join(reasons),
    )


def random_channel(rng: np.random.Generator) -> ChannelParams:
    """Gains log-uniform over several decades, phases uniform."""
    return ChannelParams(
        snr_p=10 ** rng.uniform(0, 3),
        snr_c=10 ** rng.uniform(0, 3),
        inr_p=10 ** rng.uniform(-1, 2.5),
        inr_c=10 ** rng.uniform(-1, 2.5),
        coop=10 ** rng.uniform(-1, 3),
        theta_p=rng.uniform(0, 2 * math.pi),
        theta_c=rng.uniform(0, 2 * math.pi),
    )


def _shares(rng: np.random.Generator, count: int) -> List[float]:
    if count == 1:
        return [1.0]
    draw = rng.dirichlet([SHARE_CONCENTRATION] * count)
    return list(draw / draw.sum())


def random_split(rng: np.random.Generator, scheme: Scheme, common: bool = True) -> PowerSplit:
    """
    Random power split of a scheme.

    With common=False the E1 split puts no power on U1 and U2.
    """
    if scheme == Scheme.E1:
        if common:
            a1, b1, c1 = _shares(rng, 3)
            a2, b2 = _shares(rng, 2)
        else:
            a1, a2, b2 = 0.0, 0.0, 1.0
            b1, c1 = _shares(rng, 2)
        return PowerSplit(a1_sq=a1, b1_sq=b1, c1_sq=c1, a2_sq=a2, b2_sq=b2)

    a1, b1, c1, d1 = _shares(rng, 4)
    a2, b2, c2 = _shares(rng, 3)
    return PowerSplit(a1_sq=a1, b1_sq=b1, c1_sq=c1, d1_sq=d1, a2_sq=a2, b2_sq=b2, c2_sq=c2)


def run_fme_check(
    trials: int,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
    inject_fault: bool = False,
) -> FmeCheckResult:
    """
    Run the cross-check over random draws.

    Even trials use E1 (every fourth without common power), odd trials E2.

    Args:
        trials: Number of draws (>= 1)
        seed: RNG seed (defaults to DEFAULT_SEED)
        tol: Support tolerance (defaults to SUPPORT_TOLERANCE_BITS)
        inject_fault: Shift every closed-form rhs down by FME_FAULT_OFFSET_BITS
    """
    settings = get_settings()
    if trials < 1:
        raise PreconditionError("trials must be at least 1")
    seed = settings.default_seed if seed is None else seed
    tol = settings.support_tolerance_bits if tol is None else tol
    fault_offset = settings.fme_fault_offset_bits if inject_fault else 0.0

    logger.info(f"🚀 FME check: {trials} trial(s), seed={seed}{' (fault injection)' if inject_fault else ''}")
    rng = np.random.default_rng(seed)
    tracker = SweepErrorTracker()
    results: List[FmeTrial] = []

    for t in range(trials):
        scheme = Scheme.E1 if t % 2 == 0 else Scheme.E2
        p = random_channel(rng)
        s = random_split(rng, scheme, common=(t % 4 != 0))
        try:
            outcome = run_fme_trial(t, p, s, scheme, tol=tol, fault_offset=fault_offset)
        except CCICError as e:
            tracker.track_point_error(f"trial {t}", "oracle", e, {"scheme": scheme.value})
            outcome = FmeTrial(t, scheme, ERROR, reason=str(e))
        if outcome.status == FAIL:
            logger.debug(f"❌ trial {t} ({scheme.value}): {outcome.reason}")
        results.append(outcome)

    result = FmeCheckResult(
        seed=seed,
        tolerance=tol,
        trials=results,
        errors=tracker.get_summary().get_error_messages(),
    )
    log = logger.info if result.is_success else logger.warning
    log(f"📊 FME check: {result.summary_line()}")
    return result
