"""
Report Writer for emitted tables.

Sanitizes report records into primitives and writes them as CSV (comment
header, 12 significant digits) or JSON ({"meta": ..., "rows": [...]}).
"""

import csv
import enum
import json
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, TextIO

import numpy as np

from app.core.config import TOOLKIT_VERSION, get_settings
from app.core.exceptions import PreconditionError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")
TOOLKIT_NAME = "ccic-gap"


class RecordSanitizer:
    """
    Converts report values into JSON/CSV primitives.

    Enums become their values, numpy scalars become Python numbers, tuples
    become lists and non-finite floats become None.
    """

    def sanitize(self, record: Optional[Dict[str, Any]]) -> Dict[str, Any]:
        """
        Example:
            >>> RecordSanitizer().sanitize({"regime": Regime.RED, "gap": np.float64(1.5)})
            {"regime": "Red", "gap": 1.5}
        """
        if not record:
            return {}
        return {key: self._value(value) for key, value in record.items()}

    def _value(self, value: Any) -> Any:
        if isinstance(value, enum.Enum):
            return value.value
        if value is None or isinstance(value, (str, bool)):
            return value
        if isinstance(value, np.generic):
            value = value.item()
        if isinstance(value, int):
            return value
        if isinstance(value, float):
            return value if math.isfinite(value) else None
        if isinstance(value, (list, tuple)):
            return [self._value(v) for v in value]
        logger.debug(f"Converting unknown type {type(value)} to string")
        return str(value)


def format_cell(value: Any, digits: int) -> str:
    """CSV cell text: floats to `digits` significant digits, booleans lower case."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    if isinstance(value, list):
        return " ".join(format_cell(v, digits) for v in value)
    return str(value)


@dataclass(frozen=True)
class OutputMeta:
    """Run metadata recorded in every output."""
    command: str
    seed: int
    tol: float
    gap_tol: float

    def header_line(self) -> str:
        return f"# {TOOLKIT_NAME} {TOOLKIT_VERSION} seed={self.seed} tol={self.tol:g} gap_tol={self.gap_tol:g}"

    def as_dict(self) -> Dict[str, Any]:
        return {
            "toolkit": TOOLKIT_NAME,
            "version": TOOLKIT_VERSION,
            "command": self.command,
            "seed": self.seed,
            "tol": self.tol,
            "gap_tol": self.gap_tol,
        }


class ReportWriter:
    """Writes one table to a text stream in a fixed format."""

    def __init__(self, output_format: str, meta: OutputMeta):
        if output_format not in OUTPUT_FORMATS:
            raise PreconditionError(f"Unknown output format '{output_format}'")
        self.output_format = output_format
        self.meta = meta
        self.sanitizer = RecordSanitizer()
        self.digits = get_settings().csv_significant_digits

    def write(self, stream: TextIO, columns: Sequence[str], rows: List[Dict[str, Any]]) -> None:
        """
        Args:
            stream: Target text stream (LF line endings)
            columns: Column order (CSV header)
            rows: One record per row, keyed by column
        """
        clean = [self.sanitizer.sanitize({c: row.get(c) for c in columns}) for row in rows]
        if self.output_format == "json":
            stream.write(json.dumps({"meta": self.meta.as_dict(), "rows": clean}, sort_keys=True, indent=2))
            stream.write("\n")
            return

        stream.write(self.meta.header_line() + "\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in clean:
            writer.writerow([format_cell(row[c], self.digits) for c in columns])
