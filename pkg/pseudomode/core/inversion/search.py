# -*- coding: utf-8 -*-
"""
search

Heuristic search over inversion choices for non-negative residual rates.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from ..bath.fits import ExpFit
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import InfeasibleInversionError, PositivitySearchError, ValidationError
from .choices import InversionChoices
from .solver import InversionResult, _checked_fit, choices_from_gram, invert


logger = logging.getLogger(__name__)

_PENALTY = 1e6


@dataclass(frozen=True)
class SearchStrategy:
    """Budget and seeding of :func:`positivity_search`."""

    budget: int = 4000
    starts: int = 8
    seed: int = 0
    threads: int | None = None
    scan_points: int = 25

    def __post_init__(self) -> None:
        if self.budget < 1 or self.starts < 1 or self.scan_points < 1:
            raise ValidationError("Search budget, starts and scan points must be positive")


@dataclass(frozen=True, eq=False)
class SearchReport:
    """Outcome of a positivity search."""

    best: InversionResult | None
    best_min_rate: float
    evaluations: int
    starts: int
    history: tuple[float, ...] = field(default_factory=tuple)

    @property
    def success(self) -> bool:
        return self.best is not None and self.best_min_rate >= 0.0


class _Parametrisation:
    """Map a real parameter vector to inversion choices.

    The vector holds ``log|u_k|`` and ``arg u_k`` for ``k ≥ 1`` followed by a
    lower-triangular Cholesky factor of the lower block ``Y`` whose diagonal
    enters through ``exp``.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.size_u = 2 * (n - 1)
        self.m = n - 1
        self.size_y = self.m + self.m * (self.m - 1)

    @property
    def size(self) -> int:
        return self.size_u + self.size_y

    def bounds(self) -> list[tuple[float, float]]:
        u_bounds = [(-3.0, 3.0), (-math.pi, math.pi)] * (self.n - 1)
        y_bounds = [(-12.0, 8.0)] * self.m + [(-50.0, 50.0)] * (self.m * (self.m - 1))
        return u_bounds + y_bounds

    def vector(self, params: np.ndarray) -> np.ndarray:
        u = np.ones(self.n, dtype=complex)
        if self.n > 1:
            pairs = params[: self.size_u].reshape(self.n - 1, 2)
            u[1:] = np.exp(pairs[:, 0] + 1j * pairs[:, 1])
        return u

    def lower(self, params: np.ndarray) -> np.ndarray:
        chunk = params[self.size_u :]
        factor = np.diag(np.exp(chunk[: self.m])).astype(complex)
        rows, cols = np.tril_indices(self.m, -1)
        off = chunk[self.m :].reshape(-1, 2) if rows.size else np.zeros((0, 2))
        factor[rows, cols] = off[:, 0] + 1j * off[:, 1]
        return factor @ factor.conj().T

    def choices(self, params: np.ndarray) -> InversionChoices:
        lower = self.lower(params)
        return InversionChoices(
            u=self.vector(params),
            a22=float(lower[0, 0].real),
            b=lower[1:, 1:],
            cross=lower[1:, 0],
        )

    def encode(self, u: np.ndarray, lower: np.ndarray) -> np.ndarray:
        """Return parameters for ``u`` (with ``u₀ = 1``) and a positive lower block."""
        pairs = np.stack([np.log(np.abs(u[1:])), np.angle(u[1:])], axis=1).ravel()
        factor = np.linalg.cholesky(lower)
        rows, cols = np.tril_indices(self.m, -1)
        off = factor[rows, cols]
        chunk = np.concatenate(
            [np.log(np.diag(factor).real), np.stack([off.real, off.imag], axis=1).ravel()]
        )
        return np.concatenate([pairs, chunk])


def _evaluate(fit: ExpFit, choices: InversionChoices, config: PseudomodeSettings) -> tuple[float, InversionResult | None]:
    try:
        result = invert(fit, choices, settings=config)
    except (InfeasibleInversionError, ValidationError, np.linalg.LinAlgError):
        return -_PENALTY, None
    return result.diagnostics.min_rate, result


def positivity_search(
    fit: ExpFit,
    strategy: SearchStrategy | None = None,
    *,
    settings: PseudomodeSettings | None = None,
) -> InversionResult:
    """Look for inversion choices whose residual rates are all non-negative.

    A deterministic scan over the scale of the lower block at ``u = 1`` (and,
    for real positive amplitudes, the diagonal realisation) seeds bounded
    Nelder-Mead runs from ``strategy.starts`` starting points.  Raises
    ``PositivitySearchError`` carrying a :class:`SearchReport` when the best
    minimum rate stays negative.
    """
    strategy = strategy or SearchStrategy()
    config = resolve_settings(settings)
    kappa, _ = _checked_fit(fit)
    n = kappa.size
    if n == 1:
        return invert(fit, settings=config)
    shape = _Parametrisation(n)
    ones = np.ones(n, dtype=complex)
    # default A22 at u = 1
    base = float(kappa.sum().real / n)

    seeds: list[np.ndarray] = []
    if np.all(np.abs(kappa.imag) <= 1e-12 * np.abs(kappa).max()) and np.all(kappa.real > 0):
        diagonal = choices_from_gram(fit, np.diag(kappa.real).astype(complex), ones)
        lower = np.zeros((n - 1, n - 1), dtype=complex)
        lower[0, 0] = diagonal.a22
        lower[1:, 0] = diagonal.cross
        lower[0, 1:] = diagonal.cross.conj()
        lower[1:, 1:] = diagonal.b
        seeds.append(shape.encode(ones, lower))
    for scale in base * np.logspace(-3.0, 3.0, strategy.scan_points):
        seeds.append(shape.encode(ones, scale * np.eye(n - 1, dtype=complex)))

    history: list[float] = []
    best_rate, best_result, best_params = -math.inf, None, seeds[0]
    for params in seeds:
        rate, result = _evaluate(fit, shape.choices(params), config)
        history.append(rate)
        if rate > best_rate:
            best_rate, best_result, best_params = rate, result, params
    evaluations = len(seeds)
    if best_rate >= 0.0:
        logger.debug("Positivity found during scan", extra={"min_rate": best_rate, "modes": n})
        return best_result

    rng = np.random.default_rng(strategy.seed)
    bounds = shape.bounds()
    lows = np.array([lo for lo, _ in bounds])
    highs = np.array([hi for _, hi in bounds])
    starts = [np.clip(best_params, lows, highs)]
    for _ in range(strategy.starts - 1):
        jitter = rng.normal(scale=0.5, size=shape.size)
        starts.append(np.clip(best_params + jitter, lows, highs))
    per_start = max(strategy.budget // strategy.starts, 1)

    def objective(params: np.ndarray) -> float:
        rate, _ = _evaluate(fit, shape.choices(params), config)
        return -rate

    def run(start: np.ndarray):
        return minimize(
            objective,
            start,
            method="Nelder-Mead",
            bounds=bounds,
            options={"maxfev": per_start, "xatol": 1e-10, "fatol": 1e-12},
        )

    threads = strategy.threads or config.threads
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(run, starts))
    else:
        outcomes = [run(start) for start in starts]

    for outcome in outcomes:
        evaluations += int(outcome.nfev)
        rate, result = _evaluate(fit, shape.choices(outcome.x), config)
        history.append(rate)
        if rate > best_rate:
            best_rate, best_result = rate, result

    report = SearchReport(
        best=best_result,
        best_min_rate=best_rate,
        evaluations=evaluations,
        starts=len(starts),
        history=tuple(history),
    )
    if not report.success:
        logger.warning(
            "Positivity search exhausted its budget with min Γ = %s",
            best_rate,
            extra={"evaluations": evaluations, "starts": len(starts)},
        )
        raise PositivitySearchError(
            f"No choice with non-negative rates found (best min Γ = {best_rate:.6g})",
            report=report,
        )
    logger.debug("Positivity found", extra={"min_rate": best_rate, "evaluations": evaluations})
    return best_result


__all__ = ["SearchStrategy", "SearchReport", "positivity_search"]


# The End
