# -*- coding: utf-8 -*-
"""
cli

CLI utilities for the pseudomode toolkit.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

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
from .entry import PseudomodeCLI, cli
from .jobs import CLISettings, load_job, parse_job
from .pipelines import JobRunner, RunContext
from .reporting import RunReport

__all__ = [
    "EtaCommand",
    "FitCommand",
    "InvertCommand",
    "JeffCommand",
    "KernelCommand",
    "ReproduceGroup",
    "RunCommand",
    "TileCommand",
    "TransmitCommand",
    "PseudomodeCLI",
    "cli",
    "CLISettings",
    "load_job",
    "parse_job",
    "JobRunner",
    "RunContext",
    "RunReport",
]


# The End
