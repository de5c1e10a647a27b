# -*- coding: utf-8 -*-
"""
jobs

Versioned job documents consumed by the command line.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field as PField, TypeAdapter, model_validator
from pydantic import ValidationError as SchemaError
from pydantic_settings import BaseSettings, SettingsConfigDict

from ...core.bath.spectral import SpectralModel, SpectralModelSpec
from ...core.configuration import ENV_PREFIX
from ...core.exceptions import ConfigurationError
from ...core.io import (
    BathDocument,
    ChoicesDocument,
    FitDocument,
    load_document,
    load_model,
    read_tabulated_csv,
)


class CLISettings(BaseSettings):
    """Defaults for global CLI options, read from ``PSEUDOMODE_*`` variables."""

    model_config = SettingsConfigDict(env_prefix=ENV_PREFIX, extra="ignore")

    out: Path = Path("out")
    threads: int = PField(1, ge=1)
    seed: int = PField(0, ge=0)
    log_level: str = "WARNING"


class Grid(BaseModel):
    """Uniform grid ``{min, max, count}``."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    lo: float = PField(alias="min")
    hi: float = PField(alias="max")
    count: int = PField(ge=2)

    @model_validator(mode="after")
    def _check_order(self) -> "Grid":
        if not self.hi > self.lo:
            raise ValueError("grid max must exceed min")
        return self

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)


def _require_file(path: Path | None, label: str) -> None:
    if path is not None and not Path(path).is_file():
        raise ValueError(f"{label} {path} does not exist")


class _Job(BaseModel):
    model_config = ConfigDict(extra="forbid", protected_namespaces=())

    version: Literal[1] = 1
    tolerances: dict[str, int | float] = PField(default_factory=dict)


class _ModelJob(_Job):
    """Job reading a spectral density inline, from JSON or from a CSV table."""

    model: SpectralModelSpec | None = None
    model_path: Path | None = None
    table_path: Path | None = None

    @model_validator(mode="after")
    def _check_source(self) -> "_ModelJob":
        given = [item is not None for item in (self.model, self.model_path, self.table_path)]
        if sum(given) != 1:
            raise ValueError("give exactly one of model, model_path and table_path")
        _require_file(self.model_path, "model_path")
        _require_file(self.table_path, "table_path")
        return self

    def spectral_model(self) -> SpectralModel:
        if self.model is not None:
            return self.model
        if self.model_path is not None:
            return load_model(self.model_path)
        return read_tabulated_csv(self.table_path)


class JeffJob(_Job):
    command: Literal["jeff"] = "jeff"
    bath: BathDocument | None = None
    bath_path: Path | None = None
    grid: Grid
    model: SpectralModelSpec | None = None

    @model_validator(mode="after")
    def _check_bath(self) -> "JeffJob":
        if (self.bath is None) == (self.bath_path is None):
            raise ValueError("give exactly one of bath and bath_path")
        _require_file(self.bath_path, "bath_path")
        return self

    def bath_document(self) -> BathDocument:
        return self.bath if self.bath is not None else load_document(self.bath_path, BathDocument)


class KernelJob(_ModelJob):
    command: Literal["kernel"] = "kernel"
    times: Grid
    method: Literal["auto", "quadrature"] = "auto"


class FitJob(_ModelJob):
    command: Literal["fit"] = "fit"
    modes: int = PField(ge=1)
    window: float | None = PField(None, gt=0.0)
    half_count: int | None = PField(None, ge=1)
    grid: Grid | None = None


class InvertJob(_Job):
    command: Literal["invert"] = "invert"
    fit: FitDocument | None = None
    fit_path: Path | None = None
    choices: ChoicesDocument | None = None
    search: bool = False
    budget: int = PField(4000, ge=1)
    starts: int = PField(8, ge=1)
    grid: Grid | None = None

    @model_validator(mode="after")
    def _check_fit(self) -> "InvertJob":
        if (self.fit is None) == (self.fit_path is None):
            raise ValueError("give exactly one of fit and fit_path")
        _require_file(self.fit_path, "fit_path")
        return self

    def fit_document(self) -> FitDocument:
        return self.fit if self.fit is not None else load_document(self.fit_path, FitDocument)


class TileJob(_ModelJob):
    command: Literal["tile"] = "tile"
    variant: Literal["lorentzian", "squared-lorentzian"] = "lorentzian"
    n: int = PField(ge=2)
    omega_min: float
    omega_max: float
    grid: Grid | None = None


class EtaJob(_Job):
    command: Literal["eta"] = "eta"
    which: Literal[1, 2] = 1
    r: list[float] = PField(default_factory=lambda: [0.0], min_length=1)
    series_terms: int | None = PField(None, ge=1)


class LeadDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", protected_namespaces=())

    label: str
    model: SpectralModelSpec | None = None
    bath: BathDocument | None = None

    @model_validator(mode="after")
    def _check_lead(self) -> "LeadDocument":
        if (self.model is None) == (self.bath is None):
            raise ValueError(f"lead '{self.label}' needs exactly one of model and bath")
        return self


class TransmitJob(_Job):
    command: Literal["transmit"] = "transmit"
    h_s: list[list[float]]
    leads: list[LeadDocument] = PField(min_length=2)
    grid: Grid
    mode: Literal["true", "effective", "extended", "compare"] = "effective"
    reference: list[LeadDocument] | None = None


# numbered names used by older job documents
REPRODUCE_ALIASES = {
    "reproduce-fig2": "reproduce-prony-baseline",
    "reproduce-fig3": "reproduce-lorentzian-tiling",
    "reproduce-fig4": "reproduce-tiling-factors",
}


class ReproduceJob(_Job):
    command: Literal[
        "reproduce-prony-baseline",
        "reproduce-lorentzian-tiling",
        "reproduce-tiling-factors",
        "reproduce-fig2",
        "reproduce-fig3",
        "reproduce-fig4",
    ]
    points: int = PField(601, ge=11)
    modes: int = PField(6, ge=1)
    starts: int = PField(8, ge=1)
    budget: int = PField(6000, ge=1)

    @property
    def dataset(self) -> str:
        """Return the canonical command, resolving numbered aliases."""
        return REPRODUCE_ALIASES.get(self.command, self.command)


JobConfig = Annotated[
    Union[JeffJob, KernelJob, FitJob, InvertJob, TileJob, EtaJob, TransmitJob, ReproduceJob],
    PField(discriminator="command"),
]

_JOB_ADAPTER: TypeAdapter = TypeAdapter(JobConfig)


def parse_job(data: dict[str, Any]) -> BaseModel:
    """Validate a job mapping; schema problems raise ``ConfigurationError``."""
    try:
        return _JOB_ADAPTER.validate_python(data)
    except SchemaError as exc:
        raise ConfigurationError(f"Invalid job configuration: {exc}") from exc


def load_job(path: Path) -> BaseModel:
    """Read a JSON job document."""
    source = Path(path)
    if not source.is_file():
        raise ConfigurationError(f"Job configuration {source} does not exist")
    try:
        data = json.loads(source.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{source} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigurationError(f"{source} must hold a JSON object")
    return parse_job(data)


__all__ = [
    "CLISettings",
    "Grid",
    "JeffJob",
    "KernelJob",
    "FitJob",
    "InvertJob",
    "TileJob",
    "EtaJob",
    "LeadDocument",
    "TransmitJob",
    "REPRODUCE_ALIASES",
    "ReproduceJob",
    "JobConfig",
    "parse_job",
    "load_job",
]


# The End
