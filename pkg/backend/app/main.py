"""
CCIC Gap Toolkit - Command-Line Entry Point

Region evaluation, constant-gap sweeps, constraint ledgers, reference
comparisons, gDoF curves and the FME cross-check. Tables go to stdout (or
--out), logs to stderr.
"""

import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple

from app.core.config import get_settings
from app.core.exceptions import CCICError, PreconditionError
from app.models.channel import SymmetricParams
from app.models.region import RatePolytope
from app.services.certify import (
    GapSweepOrchestrator,
    GridSpec,
    OutputMeta,
    ReportWriter,
    constraint_ledger,
    gdof_estimate,
    parse_axis,
    reference_comparison,
    run_fme_check,
)
from app.services.certify.gap_sweep import classify_point, point_regions
from app.services.certify.grid import snr_from_db
from app.services.polytope import is_empty, vertices2d

logger = logging.getLogger(__name__)

# (columns, rows, exit code)
CommandResult = Tuple[Sequence[str], List[Dict[str, Any]], int]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

REGION_COLUMNS = ("section", "region", "label", "coeff_p", "coeff_c", "rhs", "constant", "rp", "rc")
GAP_COLUMNS = (
    "snr_db", "alpha", "beta", "regime", "evaluated_as", "gap_bits", "budget_bits",
    "certified", "external", "binding_rp", "binding_rc",
)
LEDGER_COLUMNS = ("regime", "inner_label", "outer_labels", "slack", "constant", "within_constant")
REFERENCE_COLUMNS = ("kind", "S", "I", "C", "symmetric_into_reference", "reference_into_symmetric")
GDOF_COLUMNS = (
    "alpha", "beta", "d_outer", "d_inner", "spread", "d_outer_limit", "d_inner_limit", "inner_source",
    "limits_crossed",
)
FME_COLUMNS = ("trial", "scheme", "status", "oracle_dev", "containment_dev", "closed_form_excess", "reason")


def setup_logging(verbose: bool = False) -> None:
    """
    Configure the root logger once.

    Logs go to stderr: stdout carries the emitted tables.
    """
    settings = get_settings()
    log_level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.setFormatter(logging.Formatter('%(levelname)s: %(name)s - %(message)s'))
    root_logger.addHandler(handler)

    # Reduce noise from third-party libraries
    logging.getLogger('numpy').setLevel(logging.WARNING)
    logging.getLogger('scipy').setLevel(logging.WARNING)


# =============================================================================
# Argument parsing
# =============================================================================

def _add_point_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--snr-db", type=float, help="SNR S in dB")
    parser.add_argument("--alpha", type=float, help="Interference exponent (I = S^alpha)")
    parser.add_argument("--beta", type=float, help="Cooperation exponent (C = S^beta)")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="Output file (default: stdout)")
    parser.add_argument("--seed", type=int, help="Seed recorded in the header (and used by fme-check)")
    parser.add_argument("--tol", type=float, help="Comparison tolerance override for this command")
    parser.add_argument("--verbose", action="store_true", help="Log per-point details")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccic-gap",
        description="Constant-gap toolkit for the symmetric Gaussian causal cognitive interference channel",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    region = commands.add_parser("region", help="Printed regions of one point")
    _add_point_flags(region)
    region.add_argument("--which", choices=("outer", "inner", "both"), default="both")
    _add_output_flags(region)

    sweep = commands.add_parser("gap-sweep", help="Certify the constant gap over a grid")
    _add_point_flags(sweep)
    sweep.add_argument("--grid", help='e.g. "snr_db=10:60:10;alpha=0.1:0.9:0.1;beta=0.05:1.95:0.1"')
    sweep.add_argument("--workers", type=int, help="Thread workers (default: SWEEP_WORKERS)")
    _add_output_flags(sweep)

    ledger = commands.add_parser("ledger", help="Per-constraint slack of one point")
    _add_point_flags(ledger)
    _add_output_flags(ledger)

    reference = commands.add_parser("reference", help="Compare with the reference outer regions")
    _add_point_flags(reference)
    _add_output_flags(reference)

    gdof = commands.add_parser("gdof", help="gDoF curves")
    gdof.add_argument("--alpha-range", default="0:2:0.1", help="Axis of alpha values")
    gdof.add_argument("--betas", default="0", help="Axis of beta values")
    gdof.add_argument("--snr-db-list", help="Ascending SNR values in dB (default: GDOF_SNR_DB)")
    _add_output_flags(gdof)

    fme = commands.add_parser("fme-check", help="Cross-check the closed forms against numeric projection")
    fme.add_argument("--trials", type=int, default=50)
    fme.add_argument("--inject-fault", action="store_true", help="Perturb the closed forms (must fail)")
    _add_output_flags(fme)

    return parser


# =============================================================================
# Commands
# =============================================================================

def _require_point(args: argparse.Namespace) -> SymmetricParams:
    flags = (("--snr-db", args.snr_db), ("--alpha", args.alpha), ("--beta", args.beta))
    missing = [flag for flag, value in flags if value is None]
    if missing:
        raise PreconditionError(f"Missing {', '.join(missing)}")
    return SymmetricParams.from_db(args.snr_db, args.alpha, args.beta)


def _region_rows(P: RatePolytope) -> List[Dict[str, Any]]:
    rows: List[Dict[str, Any]] = [
        {
            "section": "constraint",
            "region": P.name,
            "label": c.label,
            "coeff_p": c.coeff_p,
            "coeff_c": c.coeff_c,
            "rhs": c.rhs,
            "constant": c.constant,
        }
        for c in P.constraints
    ]
    if is_empty(P):
        logger.warning(f"⚠️ Region {P.name} is empty at this point")
        return rows
    for k, (rp, rc) in enumerate(vertices2d(P)):
        rows.append({"section": "vertex", "region": P.name, "label": f"v{k}", "rp": rp, "rc": rc})
    return rows


def cmd_region(args: argparse.Namespace) -> CommandResult:
    point = _require_point(args)
    regime, evaluated_as = classify_point(point.S, point.alpha, point.beta)
    regions = point_regions(point.S, point.alpha, point.beta, regime, evaluated_as, substitute_empty=False)
    logger.info(f"📊 {regime.value} point, evaluated as {evaluated_as.value}")

    rows: List[Dict[str, Any]] = []
    if args.which in ("outer", "both"):
        rows += _region_rows(regions.outer)
    if args.which in ("inner", "both"):
        rows += _region_rows(regions.inner)
    return REGION_COLUMNS, rows, EXIT_OK


def cmd_gap_sweep(args: argparse.Namespace) -> CommandResult:
    grid = GridSpec.parse(args.grid).override(args.snr_db, args.alpha, args.beta)
    points = [(10.0 ** (db / 10.0), a, b) for db, a, b in grid.points()]
    result = GapSweepOrchestrator(workers=args.workers, gap_tol=args.tol).run(points)

    rows = [
        {
            "snr_db": r.snr_db,
            "alpha": r.alpha,
            "beta": r.beta,
            "regime": r.regime,
            "evaluated_as": r.evaluated_as,
            "gap_bits": r.gap,
            "budget_bits": r.budget,
            "certified": r.certified,
            "external": r.external,
            "binding_rp": r.binding_vertex[0] if r.binding_vertex else None,
            "binding_rc": r.binding_vertex[1] if r.binding_vertex else None,
        }
        for r in result.reports
    ]
    for message in result.errors:
        logger.error(f"❌ {message}")
    return GAP_COLUMNS, rows, EXIT_OK if result.is_success else EXIT_FAILURE


def cmd_ledger(args: argparse.Namespace) -> CommandResult:
    point = _require_point(args)
    _, evaluated_as = classify_point(point.S, point.alpha, point.beta)
    entries = constraint_ledger(point.S, point.inr, point.coop, evaluated_as)
    rows = [
        {
            "regime": e.regime,
            "inner_label": e.inner_label,
            "outer_labels": "+".join(e.outer_labels),
            "slack": e.slack,
            "constant": e.constant,
            "within_constant": e.within_constant,
        }
        for e in entries
    ]
    ok = all(e.within_constant for e in entries)
    return LEDGER_COLUMNS, rows, EXIT_OK if ok else EXIT_FAILURE


def cmd_reference(args: argparse.Namespace) -> CommandResult:
    point = _require_point(args)
    result = reference_comparison(point.S, point.alpha, point.beta)
    rows = [
        {
            "kind": result.kind,
            "S": result.S,
            "I": result.I,
            "C": result.C,
            "symmetric_into_reference": result.symmetric_into_reference,
            "reference_into_symmetric": result.reference_into_symmetric,
        }
    ]
    return REFERENCE_COLUMNS, rows, EXIT_OK


def cmd_gdof(args: argparse.Namespace) -> CommandResult:
    settings = get_settings()
    snr_db = parse_axis(args.snr_db_list) if args.snr_db_list else settings.gdof_snr_db_list
    S_list = snr_from_db(snr_db)

    rows = []
    for beta in parse_axis(args.betas):
        for alpha in parse_axis(args.alpha_range):
            curve = gdof_estimate(alpha, beta, S_list)
            rows.append(
                {
                    "alpha": alpha,
                    "beta": beta,
                    "d_outer": curve.d_outer[-1],
                    "d_inner": curve.d_inner[-1],
                    "spread": curve.spread,
                    "d_outer_limit": curve.d_outer_limit,
                    "d_inner_limit": curve.d_inner_limit,
                    "inner_source": curve.inner_source,
                    "limits_crossed": curve.limits_crossed,
                }
            )
    return GDOF_COLUMNS, rows, EXIT_OK


def cmd_fme_check(args: argparse.Namespace) -> CommandResult:
    result = run_fme_check(args.trials, seed=args.seed, tol=args.tol, inject_fault=args.inject_fault)
    rows = [
        {
            "trial": t.trial,
            "scheme": t.scheme,
            "status": t.status,
            "oracle_dev": t.oracle_dev,
            "containment_dev": t.containment_dev,
            "closed_form_excess": t.closed_form_excess,
            "reason": t.reason,
        }
        for t in result.trials
    ]
    print(result.summary_line(), file=sys.stderr)
    return FME_COLUMNS, rows, EXIT_OK if result.is_success else EXIT_FAILURE


COMMANDS = {
    "region": cmd_region,
    "gap-sweep": cmd_gap_sweep,
    "ledger": cmd_ledger,
    "reference": cmd_reference,
    "gdof": cmd_gdof,
    "fme-check": cmd_fme_check,
}


# =============================================================================
# Entry point
# =============================================================================

@contextmanager
def _open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Returns:
        0 on success, 1 on certification or oracle failure, 2 on usage errors
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    settings = get_settings()

    seed = settings.default_seed if args.seed is None else args.seed
    args.seed = seed
    meta = OutputMeta(
        command=args.command,
        seed=seed,
        tol=args.tol if args.tol is not None and args.command != "gap-sweep" else settings.support_tolerance_bits,
        gap_tol=args.tol if args.tol is not None and args.command == "gap-sweep" else settings.gap_tolerance_bits,
    )

    try:
        if args.tol is not None and args.tol < 0:
            raise PreconditionError("--tol must be nonnegative")
        writer = ReportWriter(args.format, meta)
        columns, rows, exit_code = COMMANDS[args.command](args)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CCICError as e:
        logger.error(f"❌ {args.command} failed: {e}")
        return EXIT_FAILURE

    with _open_output(args.out) as stream:
        writer.write(stream, columns, rows)
    logger.info(f"✅ {args.command}: {len(rows)} row(s) written")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
