# -*- coding: utf-8 -*-
"""
pipelines

Execution of validated job documents.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from ...core.bath import KernelSample, PseudomodeBath, memory_kernel_series
from ...core.configuration import PseudomodeSettings, resolve_settings
from ...core.exceptions import ConfigurationError
from ...core.fitting import (
    default_window,
    optimize_window,
    prony_fit,
    scoring_grid,
    spectral_distance,
)
from ...core.forward import effective_spectral_density_grid
from ...core.inversion import SearchStrategy, invert, positivity_search
from ...core.io import (
    BathDocument,
    FitDocument,
    InversionDocument,
    spectral_columns,
    spectral_rows,
)
from ...core.scattering import (
    Lead,
    ScatterSetup,
    effective_transmission,
    extended_transmission,
    transmission_gap,
    true_transmission,
)
from ...core.tiling import (
    DEFAULT_SERIES_TERMS,
    PROFILE_COLUMNS,
    TilingSpec,
    TilingVariant,
    diagonal_tiling,
    eta1,
    eta1_series,
    eta2,
    eta2_series,
    nd_tiling,
    tiling_error_profile,
)
from .figures import reproduce_prony_baseline, reproduce_lorentzian_tiling, reproduce_tiling_factors
from .jobs import (
    EtaJob,
    FitJob,
    InvertJob,
    JeffJob,
    KernelJob,
    REPRODUCE_ALIASES,
    LeadDocument,
    ReproduceJob,
    TileJob,
    TransmitJob,
)
from .reporting import RunReport


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunContext:
    """Global CLI options shared by every job of a run."""

    out: Path = Path("out")
    threads: int = 1
    seed: int = 0


def _lead(document: LeadDocument) -> Lead:
    bath = document.model if document.model is not None else document.bath.to_bath()
    return Lead(document.label, bath)


def _element_columns(dim: int) -> list[str]:
    names = ["t"]
    for i in range(dim):
        for j in range(dim):
            names += [f"re_{i + 1}_{j + 1}", f"im_{i + 1}_{j + 1}"]
    return names


class JobRunner:
    """Dispatch a job to its pipeline and collect the run report."""

    def __init__(self, context: RunContext | None = None, settings: PseudomodeSettings | None = None) -> None:
        """Store the run context and the base tolerances."""
        self.context = context or RunContext()
        self._settings = settings
        self._pipelines: dict[str, Callable] = {
            "jeff": self._jeff,
            "kernel": self._kernel,
            "fit": self._fit,
            "invert": self._invert,
            "tile": self._tile,
            "eta": self._eta,
            "transmit": self._transmit,
            "reproduce-prony-baseline": self._reproduce,
            "reproduce-lorentzian-tiling": self._reproduce,
            "reproduce-tiling-factors": self._reproduce,
            **{alias: self._reproduce for alias in REPRODUCE_ALIASES},
        }

    def settings_for(self, job) -> PseudomodeSettings:
        """Return the base tolerances with the job's overrides and the thread count."""
        base = resolve_settings(self._settings)
        overrides = dict(job.tolerances)
        overrides.setdefault("threads", self.context.threads)
        return base.with_overrides(overrides)

    def run(self, job) -> RunReport:
        """Execute ``job``, write ``report.json`` and return the report."""
        pipeline = self._pipelines.get(job.command)
        if pipeline is None:
            raise ConfigurationError(f"Unknown command {job.command!r}")
        settings = self.settings_for(job)
        report = RunReport(self.context.out, job.command)
        logger.info("Running %s", job.command, extra={"out": str(self.context.out), "threads": settings.threads})
        pipeline(job, report, settings)
        report.write()
        return report

    # --- pipelines --------------------------------------------------------

    def _jeff(self, job: JeffJob, report: RunReport, settings: PseudomodeSettings) -> None:
        bath = job.bath_document().to_bath()
        grid = job.grid.values()
        values = effective_spectral_density_grid(bath, grid)
        report.table("jeff.csv", spectral_columns(bath.dim), spectral_rows(grid, values))
        report.record("modes", bath.n)
        report.record("physical", bath.physical)
        if job.model is not None:
            if job.model.dim != bath.dim:
                raise ConfigurationError(
                    f"Reference model couples to {job.model.dim} sites, the bath to {bath.dim}"
                )
            target = job.model.evaluate_grid(grid)
            report.table("j.csv", spectral_columns(bath.dim), spectral_rows(grid, target))
            report.record("max_deviation", float(np.max(np.abs(values - target))))

    def _kernel(self, job: KernelJob, report: RunReport, settings: PseudomodeSettings) -> None:
        model = job.spectral_model()
        times = job.times.values()
        values = memory_kernel_series(model, times, method=job.method, settings=settings)
        flat = values.reshape(times.size, -1)
        rows = (
            (float(t), *[part for value in row for part in (float(value.real), float(value.imag))])
            for t, row in zip(times, flat)
        )
        report.table("kernel.csv", _element_columns(model.dim), rows)
        report.record("points", int(times.size))
        report.record("chi0_trace", float(np.trace(values[np.argmin(np.abs(times))]).real))

    def _fit(self, job: FitJob, report: RunReport, settings: PseudomodeSettings) -> None:
        model = job.spectral_model()
        grid = job.grid.values() if job.grid is not None else scoring_grid(model)
        if job.window is None and job.half_count is None:
            search = optimize_window(model, job.modes, omegas=grid, settings=settings)
            fit, score = search.fit, search.score
            window, half = search.window.window, search.window.half_count
            report.record("default_score", search.default_score)
        else:
            fallback = default_window(model, job.modes)
            window = job.window if job.window is not None else fallback.window
            half = job.half_count if job.half_count is not None else fallback.half_count
            samples = KernelSample.from_model(model, window / (2 * half), half, settings=settings)
            fit = prony_fit(samples, job.modes, settings=settings)
            score = spectral_distance(model, fit, grid)
        report.document("fit.json", FitDocument.from_fit(fit))
        report.table(
            "fit_terms.csv",
            ("index", "energy", "rate", "power", "kappa_re", "kappa_im"),
            (
                (k, term.energy, term.rate, term.power, float(np.trace(term.amplitude).real), float(np.trace(term.amplitude).imag))
                for k, term in enumerate(fit.terms)
            ),
        )
        report.table("j.csv", spectral_columns(model.dim), spectral_rows(grid, model.evaluate_grid(grid)))
        report.table("j_fit.csv", spectral_columns(model.dim), spectral_rows(grid, fit.spectral_density_grid(grid)))
        for note in fit.warnings:
            report.warn(note)
        report.record("residual", fit.residual)
        report.record("l2_error", score)
        report.record("window", window)
        report.record("half_count", half)

    def _invert(self, job: InvertJob, report: RunReport, settings: PseudomodeSettings) -> None:
        fit = job.fit_document().to_fit()
        if job.search:
            strategy = SearchStrategy(
                budget=job.budget, starts=job.starts, seed=self.context.seed, threads=settings.threads
            )
            result = positivity_search(fit, strategy, settings=settings)
        else:
            choices = job.choices.to_choices() if job.choices is not None else None
            result = invert(fit, choices, settings=settings)
        report.document("inversion.json", InversionDocument.from_result(result))
        report.document("bath.json", BathDocument.from_bath(result.bath))
        diagnostics = result.diagnostics
        report.record("min_rate", diagnostics.min_rate)
        report.record("kappa_error", diagnostics.kappa_error)
        report.record("physical", diagnostics.physical)
        if not diagnostics.physical:
            report.warn(f"negative residual rate (min Γ = {diagnostics.min_rate:.3e})")
        if job.grid is not None:
            grid = job.grid.values()
            values = effective_spectral_density_grid(result.bath, grid)
            report.table("jeff.csv", spectral_columns(result.bath.dim), spectral_rows(grid, values))
            reference = fit.spectral_density_grid(grid)
            report.record("max_deviation", float(np.max(np.abs(values - reference))))

    def _tile(self, job: TileJob, report: RunReport, settings: PseudomodeSettings) -> None:
        model = job.spectral_model()
        spec = TilingSpec(job.omega_min, job.omega_max, job.n, TilingVariant(job.variant))
        build = diagonal_tiling if spec.variant is TilingVariant.LORENTZIAN else nd_tiling
        bath: PseudomodeBath = build(model, spec)
        report.document("bath.json", BathDocument.from_bath(bath))
        if job.grid is not None:
            grid = job.grid.values()
        else:
            margin = 0.1 * (spec.omega_max - spec.omega_min)
            grid = np.linspace(spec.omega_min - margin, spec.omega_max + margin, 601)
        profile = tiling_error_profile(model, spec, grid)
        report.table("profile.csv", PROFILE_COLUMNS, profile.rows())
        report.record("modes", bath.n)
        report.record("max_interior_deviation", profile.max_interior_deviation(settings.interior_widths))

    def _eta(self, job: EtaJob, report: RunReport, settings: PseudomodeSettings) -> None:
        closed, series = (eta1, eta1_series) if job.which == 1 else (eta2, eta2_series)
        terms = job.series_terms or DEFAULT_SERIES_TERMS
        rows = []
        for r in job.r:
            value = float(closed(r))
            summed = series(r, terms)
            rows.append((r, value, summed, abs(value - summed)))
        report.table("eta.csv", ("r", "eta", "series", "difference"), rows)
        report.record("eta", rows[0][1])
        report.record("max_series_gap", max(row[3] for row in rows))

    def _transmit(self, job: TransmitJob, report: RunReport, settings: PseudomodeSettings) -> None:
        h_s = np.asarray(job.h_s, dtype=float)
        setup = ScatterSetup(h_s, tuple(_lead(item) for item in job.leads))
        grid = job.grid.values()
        if job.mode == "true":
            table = true_transmission(setup, grid, settings=settings)
            report.table("transmission_true.csv", table.columns, table.rows())
        elif job.mode == "effective":
            table = effective_transmission(setup, grid, settings=settings)
            report.table("transmission_effective.csv", table.columns, table.rows())
        elif job.mode == "extended":
            residual = extended_transmission(setup, grid, settings=settings)
            report.table("transmission_residual.csv", residual.columns, residual.rows())
            table = residual.aggregate()
            report.table("transmission_aggregated.csv", table.columns, table.rows())
        else:
            if job.reference is None:
                raise ConfigurationError("mode 'compare' needs reference leads")
            reference = ScatterSetup(h_s, tuple(_lead(item) for item in job.reference))
            table = effective_transmission(setup, grid, settings=settings)
            exact = true_transmission(reference, grid, settings=settings)
            report.table("transmission_effective.csv", table.columns, table.rows())
            report.table("transmission_true.csv", exact.columns, exact.rows())
            report.record("max_gap", transmission_gap(table, exact))
        first, second = setup.labels[:2]
        report.record(f"max_T_{first}_{second}", float(np.max(table.entry(first, second))))

    def _reproduce(self, job: ReproduceJob, report: RunReport, settings: PseudomodeSettings) -> None:
        if job.dataset == "reproduce-prony-baseline":
            reproduce_prony_baseline(
                report,
                settings,
                points=job.points,
                modes=job.modes,
                starts=job.starts,
                budget=job.budget,
                seed=self.context.seed,
            )
        elif job.dataset == "reproduce-lorentzian-tiling":
            reproduce_lorentzian_tiling(report, settings, points=job.points)
        else:
            reproduce_tiling_factors(report, settings, points=job.points)


__all__ = ["RunContext", "JobRunner"]


# The End
