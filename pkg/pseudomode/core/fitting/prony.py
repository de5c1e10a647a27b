# -*- coding: utf-8 -*-
"""
prony

Prony fitting of uniformly sampled kernels by sums of decaying exponentials.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial
from scipy.linalg import hankel

from ..bath.fits import ExpFit, ExpTerm, KernelSample
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import InsufficientRootsError, RankDeficientError, ValidationError
from .takagi import takagi


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PronyWorkspace:
    """Intermediate quantities of one Prony fit, kept for diagnostics."""

    step: float
    half_count: int
    modes: int
    signal: np.ndarray
    hankel: np.ndarray
    sigma: np.ndarray
    roots: np.ndarray
    accepted: np.ndarray

    @property
    def exponents(self) -> np.ndarray:
        """Return ``s_k = log(w_k) / Δt`` of the accepted roots."""
        return np.log(self.accepted) / self.step


def _vandermonde(roots: np.ndarray, count: int) -> np.ndarray:
    return roots[None, :] ** np.arange(count)[:, None]


def _prune(roots: np.ndarray, rhs: np.ndarray, modes: int) -> np.ndarray:
    """Keep the ``modes`` roots that carry the most weight in a provisional fit."""
    basis = _vandermonde(roots, rhs.shape[0])
    amplitudes = np.linalg.lstsq(basis, rhs, rcond=None)[0]
    weight = np.linalg.norm(amplitudes, axis=1) * np.linalg.norm(basis, axis=0)
    keep = np.sort(np.argsort(weight)[::-1][:modes])
    return roots[keep]


def prony_workspace(
    samples: KernelSample,
    modes: int,
    *,
    settings: PseudomodeSettings | None = None,
) -> tuple[ExpFit, PronyWorkspace]:
    """Fit ``modes`` exponentials to ``samples`` and return the fit with its workspace.

    The exponents come from the roots of the polynomial whose coefficients
    are the conjugate of Takagi vector ``modes`` of the Hankel matrix
    ``H_ij = φ_{i+j}``.  Multi-site samples share the exponents of their
    trace; amplitudes are fitted per element.
    """
    config = resolve_settings(settings)
    if modes < 1:
        raise ValidationError(f"Mode count must be positive, got {modes}")
    half = samples.half_count
    if half < 2 * modes + 1:
        raise ValidationError(
            f"Prony fitting of {modes} modes needs N ≥ {2 * modes + 1}, got N = {half}"
        )
    values = samples.values
    dim = samples.dim
    signal = np.trace(values, axis1=1, axis2=2) if dim > 1 else values[:, 0, 0]
    matrix = hankel(signal[: half + 1], signal[half:])
    unitary, sigma = takagi(matrix, settings=config)
    coefficients = np.conj(unitary[:, modes])
    roots = polynomial.polyroots(coefficients)
    magnitude = np.abs(roots)
    inside = roots[(magnitude < 1.0 - config.unit_circle_tol) & (magnitude > 0.0)]
    if inside.size < modes:
        raise InsufficientRootsError(
            f"Only {inside.size} of the requested {modes} roots lie inside the unit disk",
            count=int(inside.size),
        )
    rhs = values.reshape(values.shape[0], dim * dim)
    accepted = inside if inside.size == modes else _prune(inside, rhs, modes)

    basis = _vandermonde(accepted, values.shape[0])
    amplitudes, _, rank, _ = np.linalg.lstsq(basis, rhs, rcond=None)
    if rank < modes:
        raise RankDeficientError(
            f"Amplitude least squares has rank {rank} for {modes} exponentials"
        )
    residual = float(np.linalg.norm(basis @ amplitudes - rhs) / max(np.linalg.norm(rhs), 1e-300))
    exponents = np.log(accepted) / samples.step
    terms = tuple(
        ExpTerm.from_exponent(amplitudes[k].reshape(dim, dim), complex(exponents[k]))
        for k in range(modes)
    )
    notes = tuple(
        f"term {k} does not decay (γ = {term.rate:.3e})"
        for k, term in enumerate(terms)
        if term.rate <= 0.0
    )
    fit = ExpFit(terms=terms, residual=residual, warnings=notes)
    logger.debug(
        "Prony fit finished",
        extra={
            "modes": modes,
            "half_count": half,
            "step": samples.step,
            "inside": int(inside.size),
            "residual": residual,
        },
    )
    workspace = PronyWorkspace(
        step=samples.step,
        half_count=half,
        modes=modes,
        signal=signal,
        hankel=matrix,
        sigma=sigma,
        roots=roots,
        accepted=accepted,
    )
    return fit, workspace


def prony_fit(
    samples: KernelSample,
    modes: int,
    *,
    settings: PseudomodeSettings | None = None,
) -> ExpFit:
    """Return the ``modes``-term exponential fit of ``samples`` with its relative residual."""
    fit, _ = prony_workspace(samples, modes, settings=settings)
    return fit


__all__ = ["PronyWorkspace", "prony_workspace", "prony_fit"]


# The End
