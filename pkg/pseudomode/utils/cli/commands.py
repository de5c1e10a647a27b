# -*- coding: utf-8 -*-
"""
commands

Click command factories for the pseudomode CLI.

Every command turns its options into a job document, validates it and
hands it to :class:`JobRunner`.  Library errors become exit codes: 2 for
configuration problems, 3 for infeasible inversions and 4 for numerical
failures.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional, Sequence

import click
import numpy as np

from ...core.exceptions import ConfigurationError, NumericalError, PseudomodeError
from .jobs import REPRODUCE_ALIASES, load_job, parse_job
from .pipelines import JobRunner, RunContext
from .reporting import RunReport


logger = logging.getLogger(__name__)

_PATH = click.Path(exists=True, dir_okay=False, path_type=Path)


def _grid(lo: Optional[float], hi: Optional[float], count: Optional[int]) -> dict[str, Any] | None:
    if lo is None and hi is None and count is None:
        return None
    return {"min": lo, "max": hi, "count": count}


def _source(model: Optional[Path], table: Optional[Path]) -> dict[str, Any]:
    data: dict[str, Any] = {}
    if model is not None:
        data["model_path"] = model
    if table is not None:
        data["table_path"] = table
    return data


def _grid_options() -> list[click.Option]:
    return [
        click.Option(["--min"], type=float, help="Lower end of the ω grid"),
        click.Option(["--max"], type=float, help="Upper end of the ω grid"),
        click.Option(["--count"], type=int, help="Number of ω points"),
    ]


def _read_object(path: Path) -> dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must hold a JSON object")
    return data


def _source_options() -> list[click.Option]:
    return [
        click.Option(["--model"], type=_PATH, help="Spectral model JSON document"),
        click.Option(["--table"], type=_PATH, help="Tabulated spectral density CSV"),
    ]


class JobCommand:
    """Shared dispatch of a job document to the runner."""

    name = "job"

    def __init__(self, runner_factory=JobRunner) -> None:
        """Store the factory building a runner for the active context."""
        self._runner_factory = runner_factory

    @contextmanager
    def failures(self) -> Iterator[None]:
        """Print library errors on standard error and exit with their code."""
        try:
            yield
        except PseudomodeError as exc:
            logger.debug("Command failed", exc_info=True)
            click.secho(f"{type(exc).__name__}: {exc}", err=True, fg="red")
            raise click.exceptions.Exit(exc.exit_code) from exc
        except np.linalg.LinAlgError as exc:
            logger.debug("Linear algebra failed", exc_info=True)
            click.secho(f"LinAlgError: {exc}", err=True, fg="red")
            raise click.exceptions.Exit(NumericalError.exit_code) from exc

    def dispatch(self, data: dict[str, Any] | None = None, *, job=None) -> RunReport:
        """Validate ``data``, run it and report the summary line."""
        ctx = click.get_current_context()
        context = ctx.find_object(RunContext) or RunContext()
        with self.failures():
            if job is None:
                job = parse_job(data)
            report = self._runner_factory(context).run(job)
        self._echo_summary(report)
        return report

    def _echo_summary(self, report: RunReport) -> None:
        click.secho(report.summary_line(), fg="yellow" if report.warnings else "green")
        for warning in report.warnings:
            click.secho(f"  warning: {warning}", fg="yellow", err=True)


class RunCommand(JobCommand):
    """Produce the `run` command executing a JSON job document."""

    name = "run"

    def execute(self, config: Path) -> None:
        """Load ``config`` and run the pipeline it names."""
        with self.failures():
            job = load_job(config)
        self.dispatch(job=job)

    def to_click_command(self) -> click.Command:
        """Return a Click command configured for config-driven runs."""
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[click.Option(["--config"], type=_PATH, required=True, help="Job document (JSON)")],
            help="Run the pipeline described by a job document.",
        )


class JeffCommand(JobCommand):
    """Produce the `jeff` command tabulating a bath's effective spectral density."""

    name = "jeff"

    def execute(self, bath: Path, model: Optional[Path], min: float, max: float, count: int) -> None:
        data: dict[str, Any] = {"command": "jeff", "bath_path": bath, "grid": _grid(min, max, count)}
        if model is not None:
            with self.failures():
                data["model"] = _read_object(model)
        self.dispatch(data)

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                click.Option(["--bath"], type=_PATH, required=True, help="Pseudomode bath JSON document"),
                click.Option(["--model"], type=_PATH, help="Reference spectral model to compare against"),
                click.Option(["--min"], type=float, default=-2.0, show_default=True, help="Lower end of the ω grid"),
                click.Option(["--max"], type=float, default=2.0, show_default=True, help="Upper end of the ω grid"),
                click.Option(["--count"], type=int, default=401, show_default=True, help="Number of ω points"),
            ],
            help="Tabulate J_eff(ω) of a pseudomode bath.",
        )


class KernelCommand(JobCommand):
    """Produce the `kernel` command tabulating the memory kernel."""

    name = "kernel"

    def execute(
        self,
        model: Optional[Path],
        table: Optional[Path],
        min: float,
        max: float,
        count: int,
        method: str,
    ) -> None:
        self.dispatch(
            {
                "command": "kernel",
                **_source(model, table),
                "times": _grid(min, max, count),
                "method": method,
            }
        )

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                *_source_options(),
                click.Option(["--min"], type=float, default=0.0, show_default=True, help="First time"),
                click.Option(["--max"], type=float, default=20.0, show_default=True, help="Last time"),
                click.Option(["--count"], type=int, default=201, show_default=True, help="Number of times"),
                click.Option(
                    ["--method"],
                    type=click.Choice(["auto", "quadrature"]),
                    default="auto",
                    show_default=True,
                    help="Use closed forms when available or force quadrature",
                ),
            ],
            help="Tabulate the memory kernel χ(t) of a spectral density.",
        )


class FitCommand(JobCommand):
    """Produce the `fit` command running Prony on a spectral density."""

    name = "fit"

    def execute(
        self,
        model: Optional[Path],
        table: Optional[Path],
        modes: int,
        window: Optional[float],
        half_count: Optional[int],
        min: Optional[float],
        max: Optional[float],
        count: Optional[int],
    ) -> None:
        self.dispatch(
            {
                "command": "fit",
                **_source(model, table),
                "modes": modes,
                "window": window,
                "half_count": half_count,
                "grid": _grid(min, max, count),
            }
        )

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                *_source_options(),
                click.Option(["--modes"], type=int, required=True, help="Number of exponential terms"),
                click.Option(["--window"], type=float, help="Sampling window t_c; searched when omitted"),
                click.Option(["--half-count"], type=int, help="Samples per half window N"),
                *_grid_options(),
            ],
            help="Fit a sum of complex exponentials to the memory kernel.",
        )


class InvertCommand(JobCommand):
    """Produce the `invert` command constructing pseudomode parameters."""

    name = "invert"

    def execute(
        self,
        fit: Path,
        search: bool,
        budget: int,
        starts: int,
        min: Optional[float],
        max: Optional[float],
        count: Optional[int],
    ) -> None:
        self.dispatch(
            {
                "command": "invert",
                "fit_path": fit,
                "search": search,
                "budget": budget,
                "starts": starts,
                "grid": _grid(min, max, count),
            }
        )

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                click.Option(["--fit"], type=_PATH, required=True, help="Fit JSON document"),
                click.Option(["--search"], is_flag=True, help="Search for non-negative residual rates"),
                click.Option(["--budget"], type=int, default=4000, show_default=True, help="Search evaluations"),
                click.Option(["--starts"], type=int, default=8, show_default=True, help="Search starting points"),
                *_grid_options(),
            ],
            help="Construct (Λ, Γ, ζ) realising an exponential fit.",
        )


class TileCommand(JobCommand):
    """Produce the `tile` command building a many-mode tiling."""

    name = "tile"

    def execute(
        self,
        model: Optional[Path],
        table: Optional[Path],
        variant: str,
        n: int,
        omega_min: float,
        omega_max: float,
        min: Optional[float],
        max: Optional[float],
        count: Optional[int],
    ) -> None:
        self.dispatch(
            {
                "command": "tile",
                **_source(model, table),
                "variant": variant,
                "n": n,
                "omega_min": omega_min,
                "omega_max": omega_max,
                "grid": _grid(min, max, count),
            }
        )

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                *_source_options(),
                click.Option(
                    ["--variant"],
                    type=click.Choice(["lorentzian", "squared-lorentzian"]),
                    default="lorentzian",
                    show_default=True,
                    help="Tiling family",
                ),
                click.Option(["--n"], type=int, required=True, help="Number of pseudomodes"),
                click.Option(["--omega-min"], type=float, default=-1.0, show_default=True, help="First centre"),
                click.Option(["--omega-max"], type=float, default=1.0, show_default=True, help="Last centre"),
                *_grid_options(),
            ],
            help="Tile a spectral density with pseudomodes and tabulate its error profile.",
        )


class EtaCommand(JobCommand):
    """Produce the `eta` command evaluating the nonconvergence factors."""

    name = "eta"

    def execute(self, which: str, r: Sequence[float], terms: Optional[int]) -> None:
        self.dispatch(
            {"command": "eta", "which": int(which), "r": list(r) or [0.0], "series_terms": terms}
        )

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                click.Option(["--which"], type=click.Choice(["1", "2"]), default="1", show_default=True, help="Tiling family"),
                click.Option(["--r"], type=float, multiple=True, help="Offset in units of the spacing (repeatable)"),
                click.Option(["--terms"], type=int, help="Series truncation |ℓ| ≤ terms"),
            ],
            help="Evaluate η(r) in closed form and by direct summation.",
        )


class TransmitCommand(JobCommand):
    """Produce the `transmit` command computing lead-to-lead transmission."""

    name = "transmit"

    def execute(self, setup: Path, mode: str, min: float, max: float, count: int) -> None:
        with self.failures():
            data = _read_object(setup)
        data.update(command="transmit", mode=mode, grid=_grid(min, max, count))
        self.dispatch(data)

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                click.Option(["--setup"], type=_PATH, required=True, help="JSON with h_s, leads and reference"),
                click.Option(
                    ["--mode"],
                    type=click.Choice(["true", "effective", "extended", "compare"]),
                    default="effective",
                    show_default=True,
                    help="Transmission formula",
                ),
                click.Option(["--min"], type=float, default=-3.0, show_default=True, help="Lower end of the ω grid"),
                click.Option(["--max"], type=float, default=3.0, show_default=True, help="Upper end of the ω grid"),
                click.Option(["--count"], type=int, default=500, show_default=True, help="Number of ω points"),
            ],
            help="Compute transmission between leads.",
        )


class ReproduceCommand(JobCommand):
    """Produce one `reproduce` subcommand emitting plot data."""

    def __init__(self, name: str, description: str, runner_factory=JobRunner, *, hidden: bool = False) -> None:
        super().__init__(runner_factory)
        self.name = name
        self._description = description
        self._hidden = hidden

    def execute(self, points: int, modes: int, starts: int, budget: int) -> None:
        self.dispatch(
            {
                "command": f"reproduce-{self.name}",
                "points": points,
                "modes": modes,
                "starts": starts,
                "budget": budget,
            }
        )

    def to_click_command(self) -> click.Command:
        return click.Command(
            name=self.name,
            callback=self.execute,
            params=[
                click.Option(["--points"], type=int, default=601, show_default=True, help="Grid points"),
                click.Option(["--modes"], type=int, default=6, show_default=True, help="Fit modes (prony-baseline)"),
                click.Option(["--starts"], type=int, default=8, show_default=True, help="Baseline starts (prony-baseline)"),
                click.Option(["--budget"], type=int, default=6000, show_default=True, help="Baseline evaluations (prony-baseline)"),
            ],
            help=self._description,
            hidden=self._hidden,
        )


class ReproduceGroup:
    """Produce the `reproduce` group with one subcommand per dataset."""

    def __init__(self, runner_factory=JobRunner) -> None:
        self._datasets = [
            ReproduceCommand("prony-baseline", "Prony fit against a diagonal Lorentzian fit.", runner_factory),
            ReproduceCommand("lorentzian-tiling", "Lorentzian tiling of the semicircular band.", runner_factory),
            ReproduceCommand("tiling-factors", "Both tilings against their predicted factors.", runner_factory),
        ]
        self._datasets += [
            ReproduceCommand(alias.removeprefix("reproduce-"), f"Alias of {target}.", runner_factory, hidden=True)
            for alias, target in REPRODUCE_ALIASES.items()
        ]

    def to_click_command(self) -> click.Group:
        group = click.Group(name="reproduce", help="Emit the plot data behind the fitting and tiling comparisons.")
        for dataset in self._datasets:
            group.add_command(dataset.to_click_command())
        return group


__all__ = [
    "JobCommand",
    "RunCommand",
    "JeffCommand",
    "KernelCommand",
    "FitCommand",
    "InvertCommand",
    "TileCommand",
    "EtaCommand",
    "TransmitCommand",
    "ReproduceCommand",
    "ReproduceGroup",
]


# The End
