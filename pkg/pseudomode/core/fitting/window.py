# -*- coding: utf-8 -*-
"""
window

Search over Prony sampling windows scored against a target spectral density.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.integrate import trapezoid

from ..bath.fits import ExpFit, KernelSample
from ..bath.spectral import SpectralModel
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import NumericalError, ValidationError, WindowSearchError
from .prony import prony_fit


logger = logging.getLogger(__name__)

DEFAULT_WINDOW_SCALES = (5.0, 10.0, 20.0, 40.0)


@dataclass(frozen=True)
class WindowCandidate:
    """Sampling window ``t_c`` with ``2N + 1`` samples, so ``Δt = t_c / 2N``."""

    window: float
    half_count: int

    @property
    def step(self) -> float:
        return self.window / (2 * self.half_count)


@dataclass(frozen=True)
class CandidateEvaluation:
    candidate: WindowCandidate
    score: float | None = None
    reason: str | None = None

    @property
    def accepted(self) -> bool:
        return self.score is not None


@dataclass(frozen=True, eq=False)
class WindowSearchResult:
    """Best fit over the candidate grid together with every evaluation."""

    fit: ExpFit
    score: float
    window: WindowCandidate
    default_score: float | None
    evaluations: tuple[CandidateEvaluation, ...] = field(default_factory=tuple)

    @property
    def rejected(self) -> list[CandidateEvaluation]:
        return [item for item in self.evaluations if not item.accepted]


def default_candidates(model: SpectralModel, modes: int) -> list[WindowCandidate]:
    """Return ``t_c ∈ {5, 10, 20, 40}/scale`` crossed with ``N ∈ {2L+1, 4L, 8L}``."""
    scale = model.bandwidth()
    counts = sorted({2 * modes + 1, 4 * modes, 8 * modes})
    return [
        WindowCandidate(window=factor / scale, half_count=count)
        for factor in DEFAULT_WINDOW_SCALES
        for count in counts
    ]


def default_window(model: SpectralModel, modes: int) -> WindowCandidate:
    return WindowCandidate(window=10.0 / model.bandwidth(), half_count=4 * modes)


def scoring_grid(model: SpectralModel, points: int = 801) -> np.ndarray:
    """Return the frequency grid covering the support widened by half its width."""
    lo, hi = model.support()
    margin = 0.25 * (hi - lo)
    return np.linspace(lo - margin, hi + margin, points)


def spectral_distance(model: SpectralModel, fit: ExpFit, omegas: np.ndarray) -> float:
    """Return the L² distance between ``J`` and the fit's spectral density on ``omegas``."""
    target = model.evaluate_grid(omegas)
    approximation = fit.spectral_density_grid(omegas)
    squared = np.sum(np.abs(approximation - target) ** 2, axis=(1, 2))
    return float(np.sqrt(trapezoid(squared, omegas)))


def optimize_window(
    model: SpectralModel,
    modes: int,
    candidates: Sequence[WindowCandidate] | None = None,
    *,
    omegas: Iterable[float] | None = None,
    settings: PseudomodeSettings | None = None,
) -> WindowSearchResult:
    """Run Prony over every candidate window and keep the best decaying fit.

    Fits with a non-decaying term are rejected, as are windows whose
    sampling or fit raises a numerical, validation or LAPACK error.  They
    are recorded with the reason.  The default window is always evaluated so that its score
    can be reported next to the best one.
    """
    config = resolve_settings(settings)
    pool = list(candidates) if candidates is not None else default_candidates(model, modes)
    reference = default_window(model, modes)
    if reference not in pool:
        pool.append(reference)
    grid = scoring_grid(model) if omegas is None else np.asarray(list(omegas), dtype=float)

    def evaluate(candidate: WindowCandidate) -> tuple[CandidateEvaluation, ExpFit | None]:
        try:
            samples = KernelSample.from_model(
                model, candidate.step, candidate.half_count, settings=config
            )
            fit = prony_fit(samples, modes, settings=config)
        except (NumericalError, ValidationError, np.linalg.LinAlgError) as exc:
            return CandidateEvaluation(candidate, reason=f"{type(exc).__name__}: {exc}"), None
        if not fit.decaying:
            return CandidateEvaluation(candidate, reason="non-decaying exponential (γ ≤ 0)"), None
        return CandidateEvaluation(candidate, score=spectral_distance(model, fit, grid)), fit

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as executor:
            outcomes = list(executor.map(evaluate, pool))
    else:
        outcomes = [evaluate(candidate) for candidate in pool]

    evaluations = tuple(item for item, _ in outcomes)
    for item in evaluations:
        if not item.accepted:
            logger.warning(
                "Window candidate skipped: %s",
                item.reason,
                extra={"window": item.candidate.window, "half_count": item.candidate.half_count},
            )
    accepted = [(item, fit) for item, fit in outcomes if fit is not None]
    if not accepted:
        raise WindowSearchError(
            "Every sampling window was rejected",
            reasons=[item.reason or "" for item in evaluations],
        )
    best, best_fit = min(accepted, key=lambda pair: pair[0].score)
    default_score = next(
        (item.score for item in evaluations if item.candidate == reference), None
    )
    logger.debug(
        "Window search finished",
        extra={
            "candidates": len(pool),
            "accepted": len(accepted),
            "score": best.score,
            "window": best.candidate.window,
            "half_count": best.candidate.half_count,
        },
    )
    return WindowSearchResult(
        fit=best_fit,
        score=float(best.score),
        window=best.candidate,
        default_score=default_score,
        evaluations=evaluations,
    )


__all__ = [
    "DEFAULT_WINDOW_SCALES",
    "WindowCandidate",
    "CandidateEvaluation",
    "WindowSearchResult",
    "default_candidates",
    "default_window",
    "scoring_grid",
    "spectral_distance",
    "optimize_window",
]


# The End
