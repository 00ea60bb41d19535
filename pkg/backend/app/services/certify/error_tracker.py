"""
Error Tracker for certification sweeps.

Collects per-point and per-stage failures so a sweep never aborts on one
bad grid point.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

POINT_PHASES = ("classify", "regions", "gap", "oracle")


@dataclass
class PointError:
    """Failure at a single grid point or trial."""
    key: str
    phase: str
    error: str
    context: Dict[str, Any] = field(default_factory=dict)


@dataclass
class StageError:
    """Failure of a whole sweep stage."""
    stage: str
    points: int
    error: str
    context: Dict[str, Any] = field(default_factory=dict)


@dataclass
class ErrorSummary:
    """Summary of all errors tracked during a sweep."""
    point_errors: List[PointError]
    stage_errors: List[StageError]

    @property
    def total_point_errors(self) -> int:
        return len(self.point_errors)

    @property
    def total_stage_errors(self) -> int:
        return len(self.stage_errors)

    @property
    def has_errors(self) -> bool:
        return bool(self.point_errors or self.stage_errors)

    def get_error_messages(self, max_messages: int = 15) -> List[str]:
        """
        Formatted error messages, point errors first.

        Args:
            max_messages: Maximum number of messages to return
        """
        messages = [f"{e.key} [{e.phase}]: {e.error}" for e in self.point_errors[:max_messages]]
        remaining = max_messages - len(messages)
        for e in self.stage_errors[:max(remaining, 0)]:
            messages.append(f"Stage {e.stage} ({e.points} points): {e.error}")
        return messages[:max_messages]


class SweepErrorTracker:
    """Tracks point-level and stage-level errors of a sweep."""

    def __init__(self):
        self.point_errors: List[PointError] = []
        self.stage_errors: List[StageError] = []

    def track_point_error(
        self,
        key: str,
        phase: str,
        error: Exception,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        """
        Track an error at one grid point.

        Args:
            key: Grid-point key, e.g. "snr_db=40 alpha=0.5 beta=0.3"
            phase: One of POINT_PHASES
            error: Exception that occurred
            context: Additional context
        """
        self.point_errors.append(PointError(key=key, phase=phase, error=str(error), context=context or {}))
        logger.error(f"❌ Point error: {key} [{phase}]: {error}")

    def track_stage_error(
        self,
        stage: str,
        points: int,
        error: Exception,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.stage_errors.append(StageError(stage=stage, points=points, error=str(error), context=context or {}))
        logger.error(f"❌ Stage error: {stage} ({points} points): {error}")

    def get_summary(self) -> ErrorSummary:
        return ErrorSummary(point_errors=list(self.point_errors), stage_errors=list(self.stage_errors))

    def has_errors(self) -> bool:
        return bool(self.point_errors or self.stage_errors)

    def clear(self) -> None:
        self.point_errors.clear()
        self.stage_errors.clear()
