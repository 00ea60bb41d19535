"""
Grid specifications for sweeps.

An axis is "start:stop:step" (inclusive) or a comma list; a grid spec
joins axes as "snr_db=10:60:10;alpha=0.1:0.9:0.1;beta=0.05:1.95:0.1".
"""

import math
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from app.core.config import get_settings
from app.core.exceptions import PreconditionError

GRID_AXES = ("snr_db", "alpha", "beta")
AXIS_DECIMALS = 12


def parse_axis(raw: str) -> List[float]:
    """
    Parse one axis.

    Example:
        >>> parse_axis("0.1:0.3:0.1")
        [0.1, 0.2, 0.3]
    """
    raw = raw.strip()
    if not raw:
        raise PreconditionError("Empty grid axis")

    if ":" in raw:
        parts = raw.split(":")
        if len(parts) != 3:
            raise PreconditionError(f"Range axis must be start:stop:step, got '{raw}'")
        start, stop, step = (float(x) for x in parts)
        if step <= 0 or stop < start:
            raise PreconditionError(f"Range axis '{raw}' has no values")
        count = math.floor((stop - start) / step + 1e-9) + 1
        return [round(start + k * step, AXIS_DECIMALS) for k in range(count)]

    values = [float(x) for x in raw.split(",") if x.strip()]
    if not values:
        raise PreconditionError(f"Axis '{raw}' has no values")
    return values


@dataclass(frozen=True)
class GridSpec:
    """Sweep grid over SNR (dB) and the two exponents."""
    snr_db: Tuple[float, ...]
    alpha: Tuple[float, ...]
    beta: Tuple[float, ...]

    @classmethod
    def default(cls) -> "GridSpec":
        settings = get_settings()
        return cls(
            snr_db=tuple(parse_axis(settings.default_snr_db_grid)),
            alpha=tuple(parse_axis(settings.default_alpha_grid)),
            beta=tuple(parse_axis(settings.default_beta_grid)),
        )

    @classmethod
    def parse(cls, spec: Optional[str]) -> "GridSpec":
        """Parse a grid spec; axes it does not name keep their defaults."""
        grid = cls.default()
        if spec is None:
            return grid
        if not spec.strip():
            raise PreconditionError("Empty grid spec")

        for item in spec.split(";"):
            if not item.strip():
                continue
            name, sep, raw = item.partition("=")
            name = name.strip()
            if not sep or name not in GRID_AXES:
                raise PreconditionError(f"Unknown grid axis in '{item}'; expected one of {GRID_AXES}")
            grid = replace(grid, **{name: tuple(parse_axis(raw))})
        return grid

    def override(
        self,
        snr_db: Optional[float] = None,
        alpha: Optional[float] = None,
        beta: Optional[float] = None,
    ) -> "GridSpec":
        """Pin single axes to one value."""
        grid = self
        for name, value in (("snr_db", snr_db), ("alpha", alpha), ("beta", beta)):
            if value is not None:
                grid = replace(grid, **{name: (float(value),)})
        return grid

    def points(self) -> Iterator[Tuple[float, float, float]]:
        """(snr_db, alpha, beta) in grid order."""
        return iter(product(self.snr_db, self.alpha, self.beta))

    def __len__(self) -> int:
        return len(self.snr_db) * len(self.alpha) * len(self.beta)


def snr_from_db(values: Sequence[float]) -> List[float]:
    return [10.0 ** (v / 10.0) for v in values]
