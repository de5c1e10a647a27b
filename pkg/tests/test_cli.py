# -*- coding: utf-8 -*-
"""
test_cli

Tests for the command line and its job runner.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from pseudomode.core.bath import ExpFit
from pseudomode.core.exceptions import ConfigurationError
from pseudomode.core.inversion import two_mode_fit
from pseudomode.core.tiling import PROFILE_COLUMNS, eta2_series
from pseudomode.core.io import BathDocument, FitDocument, dump_document, load_document
from pseudomode.utils.cli import CLISettings, JobRunner, RunContext, cli, parse_job


def _invoke(tmp_path: Path, *args: str):
    return CliRunner().invoke(cli, ["--out", str(tmp_path / "out"), *args])


def _write_fit(path: Path, fit: ExpFit) -> Path:
    return dump_document(FitDocument.from_fit(fit), path)


class TestEtaCommand:
    """Validate the nonconvergence factor command."""

    def test_eta_at_a_centre(self, tmp_path: Path) -> None:
        """Ensure ``η₁(0)`` is reported and the artifacts are written."""
        result = _invoke(tmp_path, "eta", "--which", "1", "--r", "0")
        assert result.exit_code == 0, result.output
        assert "eta=1.09033" in result.output
        report = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
        assert report["command"] == "eta"
        assert "eta.csv" in report["artifacts"]

    def test_squared_family(self, tmp_path: Path) -> None:
        """Ensure the squared-Lorentzian factor is selectable."""
        result = _invoke(tmp_path, "eta", "--which", "2", "--r", "0", "--r", "0.5", "--terms", "2000")
        assert result.exit_code == 0, result.output
        assert "eta=1.0273" in result.output
        with (tmp_path / "out" / "eta.csv").open(encoding="utf-8") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["r", "eta", "series", "difference"]
        assert len(rows) == 3


class TestExitCodes:
    """Validate the mapping of failures to exit codes."""

    def test_bad_config(self, tmp_path: Path) -> None:
        """Ensure an invalid job document exits with code 2."""
        config = tmp_path / "job.json"
        config.write_text(json.dumps({"command": "eta", "which": 3}), encoding="utf-8")
        result = _invoke(tmp_path, "run", "--config", str(config))
        assert result.exit_code == 2
        assert not (tmp_path / "out" / "report.json").exists()

    def test_config_is_not_an_object(self, tmp_path: Path) -> None:
        """Ensure a JSON list is rejected as a job."""
        config = tmp_path / "job.json"
        config.write_text("[1, 2]", encoding="utf-8")
        assert _invoke(tmp_path, "run", "--config", str(config)).exit_code == 2

    def test_infeasible_inversion(self, tmp_path: Path) -> None:
        """Ensure a negative amplitude sum exits with code 3."""
        fit = _write_fit(tmp_path / "fit.json", ExpFit.from_arrays([-1.0, 0.5], [0.0, 1.0], [0.5, 0.5]))
        result = _invoke(tmp_path, "invert", "--fit", str(fit))
        assert result.exit_code == 3

    def test_failed_positivity_search(self, tmp_path: Path) -> None:
        """Ensure an exhausted search exits with code 3."""
        fit = _write_fit(tmp_path / "fit.json", two_mode_fit(1.0, 2.0, 1.0, 0.2))
        result = _invoke(tmp_path, "invert", "--fit", str(fit), "--search", "--budget", "80", "--starts", "1")
        assert result.exit_code == 3

    def test_singular_resolvent(self, tmp_path: Path) -> None:
        """Ensure a zero-rate mode on the grid exits with code 4."""
        bath = tmp_path / "bath.json"
        bath.write_text(
            json.dumps({"lam": [[[0.0, 0.0]]], "rates": [0.0], "zeta": [[[1.0, 0.0]]]}),
            encoding="utf-8",
        )
        result = _invoke(tmp_path, "jeff", "--bath", str(bath), "--min", "-1", "--max", "1", "--count", "3")
        assert result.exit_code == 4

    def test_lapack_failure(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
        """Ensure a LAPACK error from a pipeline exits with the numerical code."""
        def failing_run(self, job):
            raise np.linalg.LinAlgError("Eigenvalues did not converge")

        monkeypatch.setattr(JobRunner, "run", failing_run)
        result = _invoke(tmp_path, "eta", "--which", "1", "--r", "0")
        assert result.exit_code == 4
        assert "LinAlgError" in result.output


class TestPipelines:
    """Validate artifacts written by individual commands."""

    def test_invert_writes_bath(self, tmp_path: Path) -> None:
        """Ensure an inversion writes a readable bath document."""
        fit = _write_fit(tmp_path / "fit.json", ExpFit.from_arrays([0.64], [0.3], [0.5]))
        result = _invoke(tmp_path, "invert", "--fit", str(fit), "--min", "-2", "--max", "2", "--count", "41")
        assert result.exit_code == 0, result.output
        bath = load_document(tmp_path / "out" / "bath.json", BathDocument).to_bath()
        assert bath.rates[0] == pytest.approx(0.5)
        assert "physical=True" in result.output
        assert (tmp_path / "out" / "jeff.csv").is_file()

    def test_tile_from_model(self, tmp_path: Path) -> None:
        """Ensure tiling a model file writes the bath and the error profile."""
        model = tmp_path / "model.json"
        model.write_text(json.dumps({"kind": "flat-window"}), encoding="utf-8")
        result = _invoke(tmp_path, "tile", "--model", str(model), "--n", "20", "--variant", "squared-lorentzian")
        assert result.exit_code == 0, result.output
        bath = load_document(tmp_path / "out" / "bath.json", BathDocument).to_bath()
        assert bath.n == 20
        assert (tmp_path / "out" / "profile.csv").is_file()

    def test_kernel_from_model(self, tmp_path: Path) -> None:
        """Ensure the kernel table holds real and imaginary parts."""
        model = tmp_path / "model.json"
        model.write_text(json.dumps({"kind": "semi-elliptical"}), encoding="utf-8")
        result = _invoke(tmp_path, "kernel", "--model", str(model), "--max", "2", "--count", "5")
        assert result.exit_code == 0, result.output
        assert "chi0_trace=0.25" in result.output
        with (tmp_path / "out" / "kernel.csv").open(encoding="utf-8") as handle:
            header = next(csv.reader(handle))
        assert header == ["t", "re_1_1", "im_1_1"]

    def test_transmit_compare(self, tmp_path: Path) -> None:
        """Ensure matched pseudomode leads reproduce the true transmission."""
        lead = {"amplitude": 0.3, "center": 0.0, "width": 0.8}
        bath = {"lam": [[[0.0, 0.0]]], "rates": [0.8], "zeta": [[[0.3**0.5, 0.0]]]}
        setup = {
            "h_s": [[0.1]],
            "leads": [{"label": "L", "bath": bath}, {"label": "R", "bath": bath}],
            "reference": [
                {"label": "L", "model": {"kind": "lorentzian-sum", "terms": [lead]}},
                {"label": "R", "model": {"kind": "lorentzian-sum", "terms": [lead]}},
            ],
        }
        path = tmp_path / "setup.json"
        path.write_text(json.dumps(setup), encoding="utf-8")
        result = _invoke(tmp_path, "transmit", "--setup", str(path), "--mode", "compare", "--count", "31")
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
        assert report["diagnostics"]["max_gap"] < 1e-10

    def test_reproduce_lorentzian_tiling(self, tmp_path: Path) -> None:
        """Ensure the tiling dataset reports a centre ratio near ``coth(π/2)``."""
        result = _invoke(tmp_path, "reproduce", "lorentzian-tiling", "--points", "51")
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
        assert report["diagnostics"]["center_ratio_100"] == pytest.approx(1.0903314, rel=1e-2)
        assert (tmp_path / "out" / "lorentzian_tiling_centers.csv").is_file()

    def test_runner_without_click(self, tmp_path: Path) -> None:
        """Ensure jobs run directly through the runner."""
        job = parse_job({"command": "eta", "which": 2, "r": [0.25]})
        report = JobRunner(RunContext(out=tmp_path)).run(job)
        assert report.diagnostics["eta"] == pytest.approx(eta2_series(0.25), abs=1e-8)
        assert (tmp_path / "report.json").is_file()

    def test_unknown_tolerance(self, tmp_path: Path) -> None:
        """Ensure job tolerances are checked against the settings."""
        job = parse_job({"command": "eta", "tolerances": {"bogus": 1.0}})
        with pytest.raises(ConfigurationError):
            JobRunner(RunContext(out=tmp_path)).run(job)


class TestReproduce:
    """Validate the plot-data datasets."""

    def test_numbered_job_command(self, tmp_path: Path) -> None:
        """Ensure a numbered job command runs the matching dataset."""
        config = tmp_path / "job.json"
        config.write_text(json.dumps({"version": 1, "command": "reproduce-fig3", "points": 51}), encoding="utf-8")
        result = _invoke(tmp_path, "run", "--config", str(config))
        assert result.exit_code == 0, result.output
        assert (tmp_path / "out" / "lorentzian_tiling_centers.csv").is_file()
        report = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
        assert report["command"] == "reproduce-fig3"

    def test_numbered_subcommand(self, tmp_path: Path) -> None:
        """Ensure the numbered subcommand writes the same tables as the named one."""
        named = CliRunner().invoke(cli, ["--out", str(tmp_path / "named"), "reproduce", "lorentzian-tiling", "--points", "51"])
        numbered = CliRunner().invoke(cli, ["--out", str(tmp_path / "numbered"), "reproduce", "fig3", "--points", "51"])
        assert named.exit_code == 0, named.output
        assert numbered.exit_code == 0, numbered.output
        for name in ("lorentzian_tiling_profile.csv", "lorentzian_tiling_centers.csv"):
            assert (tmp_path / "named" / name).read_bytes() == (tmp_path / "numbered" / name).read_bytes()

    def test_prony_beats_the_diagonal_baseline(self, tmp_path: Path) -> None:
        """Ensure the six-mode Prony fit is closer to the band than the diagonal fit."""
        result = _invoke(
            tmp_path, "reproduce", "prony-baseline", "--points", "201", "--starts", "2", "--budget", "2000"
        )
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
        assert report["diagnostics"]["l2_prony"] < report["diagnostics"]["l2_diagonal"]
        for name in ("prony_baseline_true.csv", "prony_baseline_diagonal.csv", "prony_baseline_prony.csv"):
            assert (tmp_path / "out" / name).is_file()

    def test_tiling_factors(self, tmp_path: Path) -> None:
        """Ensure both tilings are tabulated against their predicted factors."""
        result = _invoke(tmp_path, "reproduce", "tiling-factors", "--points", "101")
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "out" / "report.json").read_text(encoding="utf-8"))
        for name in ("lorentzian", "squared"):
            with (tmp_path / "out" / f"tiling_factors_{name}.csv").open(encoding="utf-8") as handle:
                assert tuple(next(csv.reader(handle))) == PROFILE_COLUMNS
            assert f"{name}_interior_deviation" in report["diagnostics"]


class TestDeterminism:
    """Validate that artifacts do not depend on the run or the thread count."""

    @pytest.mark.parametrize(
        "args, table",
        [
            (("kernel", "--max", "2", "--count", "9"), "kernel.csv"),
            (("tile", "--n", "20", "--variant", "squared-lorentzian"), "profile.csv"),
        ],
    )
    def test_tables_are_byte_identical(self, tmp_path: Path, args: tuple[str, ...], table: str) -> None:
        """Ensure repeated and threaded runs write identical tables."""
        model = tmp_path / "model.json"
        model.write_text(json.dumps({"kind": "semi-elliptical"}), encoding="utf-8")
        outputs = []
        for index, threads in enumerate(("1", "1", "4")):
            out = tmp_path / f"run{index}"
            result = CliRunner().invoke(
                cli, ["--out", str(out), "--threads", threads, args[0], "--model", str(model), *args[1:]]
            )
            assert result.exit_code == 0, result.output
            outputs.append((out / table).read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]


class TestCLISettings:
    """Validate environment defaults of the global options."""

    def test_environment(self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
        """Ensure ``PSEUDOMODE_*`` variables seed the global options."""
        monkeypatch.setenv("PSEUDOMODE_THREADS", "3")
        monkeypatch.setenv("PSEUDOMODE_OUT", str(tmp_path))
        settings = CLISettings()
        assert settings.threads == 3
        assert settings.out == tmp_path
        assert settings.log_level == "WARNING"


# The End
