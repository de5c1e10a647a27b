# -*- coding: utf-8 -*-
"""
figures

Plot data behind the fitting and tiling comparisons.

``prony-baseline`` compares a six-mode Prony fit of the semicircular band
with a diagonal brute-force Lorentzian fit. ``lorentzian-tiling`` tabulates
a Lorentzian tiling of the same band, and ``tiling-factors`` compares both
tilings with their infinite-tiling prediction.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import minimize

from ...core.bath.fits import ExpFit
from ...core.bath.spectral import SemiElliptical, SpectralModel
from ...core.configuration.conf import PseudomodeSettings
from ...core.fitting import optimize_window, spectral_distance
from ...core.forward import term_contributions
from ...core.io import FitDocument
from ...core.tiling import (
    PROFILE_COLUMNS,
    TilingSpec,
    TilingVariant,
    tiling_error_profile,
    tiling_spectral_density,
)
from .reporting import RunReport


logger = logging.getLogger(__name__)

REFERENCE_BAND = SemiElliptical(halfwidth=1.0, height=1.0)
TILING_SIZES = (50, 100, 200)


@dataclass(frozen=True, eq=False)
class BaselineFit:
    """Best diagonal Lorentzian fit found by the multistart search."""

    fit: ExpFit
    score: float
    evaluations: int
    converged: bool


def diagonal_baseline(
    model: SpectralModel,
    modes: int,
    grid: np.ndarray,
    *,
    starts: int = 8,
    budget: int = 6000,
    seed: int = 0,
    threads: int = 1,
) -> BaselineFit:
    """Fit ``modes`` independent Lorentzians to ``J_11`` by bounded Nelder-Mead.

    The parameters are the weights ``|ζ_k|²``, centres ``ε_k`` and widths
    ``γ_k``; every start minimises the L² distance on ``grid``.
    """
    lo, hi = model.support()
    width = hi - lo
    omegas = np.asarray(grid, dtype=float)
    target = model.evaluate_grid(omegas)[:, 0, 0]
    peak = max(float(target.max()), 1e-12)
    bounds = (
        [(0.0, 2.0 * peak * width)] * modes
        + [(lo, hi)] * modes
        + [(1e-3 * width, 2.0 * width)] * modes
    )
    lows = np.array([item[0] for item in bounds])
    highs = np.array([item[1] for item in bounds])

    def density(params: np.ndarray) -> np.ndarray:
        weights, centers, rates = params.reshape(3, modes)
        x = omegas[:, None] - centers[None, :]
        return np.sum(weights * rates / (x * x + 0.25 * rates * rates), axis=1)

    def objective(params: np.ndarray) -> float:
        return float(np.sqrt(trapezoid((density(params) - target) ** 2, omegas)))

    centers = np.linspace(lo + 0.5 * width / modes, hi - 0.5 * width / modes, modes)
    rates = np.full(modes, width / modes)
    weights = model.evaluate_grid(centers)[:, 0, 0] * rates / (2.0 * math.pi)
    base = np.concatenate([weights, centers, rates])
    rng = np.random.default_rng(seed)
    initial = [base]
    for _ in range(starts - 1):
        jitter = np.concatenate(
            [
                weights * (1.0 + 0.2 * rng.normal(size=modes)),
                centers + 0.05 * width * rng.normal(size=modes),
                rates * (1.0 + 0.2 * rng.normal(size=modes)),
            ]
        )
        initial.append(np.clip(jitter, lows, highs))
    per_start = max(budget // starts, 1)

    def run(start: np.ndarray):
        return minimize(
            objective,
            start,
            method="Nelder-Mead",
            bounds=bounds,
            options={"maxfev": per_start, "xatol": 1e-9, "fatol": 1e-12},
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(run, initial))
    else:
        outcomes = [run(start) for start in initial]
    best = min(outcomes, key=lambda outcome: outcome.fun)
    converged = any(outcome.success for outcome in outcomes)
    evaluations = sum(int(outcome.nfev) for outcome in outcomes)
    if not converged:
        logger.warning(
            "Diagonal baseline exhausted its budget with L2 error %s",
            best.fun,
            extra={"evaluations": evaluations, "starts": starts},
        )
    weights, centers, rates = best.x.reshape(3, modes)
    fit = ExpFit.from_arrays(weights.astype(complex), centers, rates, residual=float(best.fun))
    return BaselineFit(fit=fit, score=float(best.fun), evaluations=evaluations, converged=converged)


def _term_columns(fit: ExpFit, grid: np.ndarray, *, split: bool) -> tuple[list[str], list[np.ndarray]]:
    names: list[str] = []
    columns: list[np.ndarray] = []
    for share in term_contributions(fit, grid):
        label = share.index + 1
        if split:
            names += [f"lorentzian_{label}", f"anti_lorentzian_{label}"]
            columns += [share.lorentzian[:, 0, 0].real, share.anti_lorentzian[:, 0, 0].real]
            if share.power:
                names.append(f"higher_{label}")
                columns.append(share.higher_order[:, 0, 0].real)
        else:
            names.append(f"mode_{label}")
            columns.append(share.total[:, 0, 0].real)
    return names, columns


def _write_columns(report: RunReport, name: str, names: list[str], columns: list[np.ndarray]) -> None:
    report.table(name, names, zip(*columns))


def reproduce_prony_baseline(
    report: RunReport,
    settings: PseudomodeSettings,
    *,
    points: int = 601,
    modes: int = 6,
    starts: int = 8,
    budget: int = 6000,
    seed: int = 0,
) -> None:
    """Write the true band, the diagonal baseline and the Prony fit with per-mode columns."""
    model = REFERENCE_BAND
    grid = np.linspace(-1.5, 1.5, points)
    target = model.evaluate_grid(grid)[:, 0, 0]
    _write_columns(report, "prony_baseline_true.csv", ["omega", "J"], [grid, target])

    baseline = diagonal_baseline(
        model, modes, grid, starts=starts, budget=budget, seed=seed, threads=settings.threads
    )
    names, columns = _term_columns(baseline.fit, grid, split=False)
    fitted = baseline.fit.spectral_density_grid(grid)[:, 0, 0].real
    _write_columns(report, "prony_baseline_diagonal.csv", ["omega", "J_fit", *names], [grid, fitted, *columns])
    if not baseline.converged:
        report.warn("diagonal baseline stopped at its evaluation budget")

    search = optimize_window(model, modes, settings=settings)
    names, columns = _term_columns(search.fit, grid, split=True)
    fitted = search.fit.spectral_density_grid(grid)[:, 0, 0].real
    _write_columns(report, "prony_baseline_prony.csv", ["omega", "J_fit", *names], [grid, fitted, *columns])
    report.document("prony_baseline_prony_fit.json", FitDocument.from_fit(search.fit))

    report.record("l2_diagonal", spectral_distance(model, baseline.fit, grid))
    report.record("l2_prony", spectral_distance(model, search.fit, grid))
    report.record("prony_window", search.window.window)
    report.record("prony_half_count", search.window.half_count)
    report.record("baseline_evaluations", baseline.evaluations)


def _center_ratio(model: SpectralModel, spec: TilingSpec) -> float:
    centers = spec.centers
    middle = 0.5 * (spec.omega_min + spec.omega_max)
    node = centers[np.argmin(np.abs(centers - middle))]
    effective = tiling_spectral_density(model, spec, [node])[0, 0, 0]
    return float(effective / model.evaluate_grid([node])[0, 0, 0])


def reproduce_lorentzian_tiling(report: RunReport, settings: PseudomodeSettings, *, points: int = 601) -> None:
    """Write a 100-mode Lorentzian tiling of the band and its centre ratio for several sizes."""
    model = REFERENCE_BAND
    grid = np.linspace(-1.2, 1.2, points)
    spec = TilingSpec(-1.0, 1.0, 100, TilingVariant.LORENTZIAN)
    profile = tiling_error_profile(model, spec, grid)
    report.table("lorentzian_tiling_profile.csv", PROFILE_COLUMNS, profile.rows())
    sizes = [(n, _center_ratio(model, TilingSpec(-1.0, 1.0, n, TilingVariant.LORENTZIAN))) for n in TILING_SIZES]
    report.table("lorentzian_tiling_centers.csv", ("n", "center_ratio"), sizes)
    report.record("center_ratio_100", dict(sizes)[100])
    report.record("interior_deviation", profile.max_interior_deviation(settings.interior_widths))


def reproduce_tiling_factors(report: RunReport, settings: PseudomodeSettings, *, points: int = 601, modes: int = 100) -> None:
    """Write both tilings' error profiles against their predicted factors."""
    model = REFERENCE_BAND
    grid = np.linspace(-1.0, 1.0, points)
    for variant, name in (
        (TilingVariant.LORENTZIAN, "lorentzian"),
        (TilingVariant.SQUARED_LORENTZIAN, "squared"),
    ):
        spec = TilingSpec(-1.0, 1.0, modes, variant)
        profile = tiling_error_profile(model, spec, grid)
        report.table(f"tiling_factors_{name}.csv", PROFILE_COLUMNS, profile.rows())
        mask = profile.interior_mask(settings.interior_widths)
        report.record(f"{name}_interior_deviation", profile.max_interior_deviation(settings.interior_widths))
        report.record(f"{name}_interior_discrepancy", float(np.max(profile.discrepancy()[mask])))


__all__ = [
    "BaselineFit",
    "REFERENCE_BAND",
    "diagonal_baseline",
    "reproduce_prony_baseline",
    "reproduce_lorentzian_tiling",
    "reproduce_tiling_factors",
]


# The End
