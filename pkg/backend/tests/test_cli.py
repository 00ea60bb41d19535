"""
Tests for the command-line entry point.
"""

import json

import pytest

from app.main import GAP_COLUMNS, LEDGER_COLUMNS, main


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# =============================================================================
# gap-sweep
# =============================================================================

class TestGapSweepCommand:
    """Tests for the gap-sweep command."""

    def test_single_point_json(self, capsys):
        """One pinned point gives one certified GreenII row."""
        code, payload = run_json(capsys, ["gap-sweep", "--snr-db", "40", "--alpha", "0.5", "--beta", "0.3"])
        assert code == 0
        assert payload["meta"]["command"] == "gap-sweep"
        (row,) = payload["rows"]
        assert row["regime"] == "GreenII"
        assert row["certified"] is True
        assert row["gap_bits"] == pytest.approx(5.0, abs=1e-9)

    def test_csv_layout(self, capsys):
        """CSV starts with the comment header and the column row."""
        code = main(["gap-sweep", "--grid", "snr_db=40;alpha=0.5;beta=0.3,1.2"])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        assert lines[0].startswith("# ccic-gap ")
        assert lines[1] == ",".join(GAP_COLUMNS)
        assert len(lines) == 4

    def test_snr_not_above_one(self, capsys):
        """0 dB is S = 1: usage error with a message on stderr."""
        code = main(["gap-sweep", "--snr-db", "0", "--alpha", "0.5", "--beta", "0.3"])
        captured = capsys.readouterr()
        assert code == 2
        assert "S must exceed 1 in linear scale" in captured.err
        assert captured.out == ""

    def test_empty_grid(self, capsys):
        """An empty grid spec is a usage error."""
        assert main(["gap-sweep", "--grid", ""]) == 2

    def test_negative_tolerance(self, capsys):
        """--tol must be nonnegative."""
        assert main(["gap-sweep", "--snr-db", "40", "--alpha", "0.5", "--beta", "0.3", "--tol", "-1"]) == 2

    def test_out_file(self, tmp_path, capsys):
        """--out writes the table to a file instead of stdout."""
        target = tmp_path / "gap.csv"
        code = main(["gap-sweep", "--snr-db", "40", "--alpha", "0.5", "--beta", "1.2", "--out", str(target)])
        assert code == 0
        assert capsys.readouterr().out == ""
        text = target.read_text(encoding="utf-8")
        assert "Yellow" in text
        assert "\r" not in text


# =============================================================================
# Point commands
# =============================================================================

class TestPointCommands:
    """Tests for region, ledger and reference."""

    def test_region_both(self, capsys):
        """Constraints and vertices of both regions."""
        code, payload = run_json(capsys, ["region", "--snr-db", "40", "--alpha", "0.5", "--beta", "0.8"])
        assert code == 0
        regions = {row["region"] for row in payload["rows"]}
        assert regions == {"outRed", "lowRed"}
        assert any(row["section"] == "vertex" for row in payload["rows"])

    def test_region_outer_only(self, capsys):
        """--which outer drops the inner region."""
        code, payload = run_json(
            capsys, ["region", "--snr-db", "40", "--alpha", "0.5", "--beta", "0.8", "--which", "outer"]
        )
        assert code == 0
        assert {row["region"] for row in payload["rows"]} == {"outRed"}

    def test_region_missing_flags(self, capsys):
        """Point commands need all three coordinates."""
        code = main(["region", "--snr-db", "40"])
        assert code == 2
        assert "--alpha" in capsys.readouterr().err

    def test_ledger(self, capsys):
        """Yellow point: nine pairings, all within two bits."""
        code = main(["ledger", "--snr-db", "40", "--alpha", "0.5", "--beta", "1.2"])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        assert lines[1] == ",".join(LEDGER_COLUMNS)
        assert len(lines) == 2 + 9
        assert "outYellowC+outYellowC+outYellowE" in lines[-1]

    def test_ledger_blue_point(self, capsys):
        """Blue points have no ledger."""
        assert main(["ledger", "--snr-db", "40", "--alpha", "1.2", "--beta", "0.5"]) == 1

    def test_reference(self, capsys):
        """Strong cooperation compares with the non-causal channel."""
        code, payload = run_json(capsys, ["reference", "--snr-db", "40", "--alpha", "0.5", "--beta", "1.5"])
        assert code == 0
        assert payload["rows"][0]["kind"] == "NonCausalCIC"


# =============================================================================
# gdof and fme-check
# =============================================================================

class TestSweepCommands:
    """Tests for gdof and fme-check."""

    def test_gdof_single_point(self, capsys):
        """alpha = beta = 0 gives one degree of freedom."""
        code, payload = run_json(
            capsys, ["gdof", "--alpha-range", "0", "--betas", "0", "--snr-db-list", "100,110,120"]
        )
        assert code == 0
        (row,) = payload["rows"]
        assert row["d_outer_limit"] == pytest.approx(1.0, abs=1e-2)
        assert row["inner_source"] == "GreenII"

    def test_gdof_reports_crossed_limits(self, capsys):
        """The clamped inner limit is flagged in its own column."""
        code, payload = run_json(
            capsys, ["gdof", "--alpha-range", "0.75", "--betas", "2", "--snr-db-list", "100,110,120"]
        )
        assert code == 0
        (row,) = payload["rows"]
        assert row["limits_crossed"] is True
        assert row["d_inner_limit"] == pytest.approx(row["d_outer_limit"])

    def test_fme_check_passes(self, capsys):
        """A short run passes and prints its summary to stderr."""
        code = main(["fme-check", "--trials", "2", "--seed", "7"])
        captured = capsys.readouterr()
        assert code == 0
        assert "pass" in captured.err
        assert "seed=7" in captured.out.splitlines()[0]

    def test_fme_check_fault(self, capsys):
        """Fault injection must fail."""
        assert main(["fme-check", "--trials", "2", "--seed", "7", "--inject-fault"]) == 1

    def test_unknown_command(self):
        """argparse rejects unknown subcommands."""
        with pytest.raises(SystemExit) as exc:
            main(["plot"])
        assert exc.value.code == 2
