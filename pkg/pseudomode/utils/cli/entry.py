# -*- coding: utf-8 -*-
"""
entry

Click entry point for the pseudomode toolkit.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Optional

import click

from .commands import (
    EtaCommand,
    FitCommand,
    InvertCommand,
    JeffCommand,
    KernelCommand,
    ReproduceGroup,
    RunCommand,
    TileCommand,
    TransmitCommand,
)
from .jobs import CLISettings
from .pipelines import JobRunner, RunContext

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class PseudomodeCLI:
    """Aggregate all CLI commands exposed by the package."""

    def __init__(self, runner_factory=JobRunner) -> None:
        """Create command instances required to build the CLI group."""
        self._commands = [
            RunCommand(runner_factory),
            JeffCommand(runner_factory),
            KernelCommand(runner_factory),
            FitCommand(runner_factory),
            InvertCommand(runner_factory),
            TileCommand(runner_factory),
            EtaCommand(runner_factory),
            TransmitCommand(runner_factory),
        ]
        self._reproduce = ReproduceGroup(runner_factory)

    def configure(
        self,
        out: Optional[Path],
        threads: Optional[int],
        seed: Optional[int],
        log_level: Optional[str],
    ) -> None:
        """Resolve global options against ``PSEUDOMODE_*`` defaults and set up logging."""
        defaults = CLISettings()
        level = (log_level or defaults.log_level).upper()
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
        ctx = click.get_current_context()
        ctx.obj = RunContext(
            out=out if out is not None else defaults.out,
            threads=threads if threads is not None else defaults.threads,
            seed=seed if seed is not None else defaults.seed,
        )

    def create_cli(self) -> click.Group:
        """Build the Click group with all registered commands."""
        group = click.Group(
            name="pseudomode",
            help="Pseudomode bath fitting, inversion, tiling and transmission.",
            callback=self.configure,
            params=[
                click.Option(["--out"], type=click.Path(file_okay=False, path_type=Path), help="Output directory"),
                click.Option(["--threads"], type=click.IntRange(min=1), help="Worker threads"),
                click.Option(["--seed"], type=click.IntRange(min=0), help="Optimizer seed"),
                click.Option(
                    ["--log-level"],
                    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
                    help="Logging level on standard error",
                ),
            ],
        )
        for command in self._commands:
            group.add_command(command.to_click_command())
        group.add_command(self._reproduce.to_click_command())
        return group


cli = PseudomodeCLI().create_cli()


# The End
