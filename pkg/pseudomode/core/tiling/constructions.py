# -*- coding: utf-8 -*-
"""
constructions

Many-mode tilings of a spectral window by evenly spaced pseudomodes.

The Lorentzian tiling places one damped mode of width ``γ`` at each of ``n``
evenly spaced energies.  The squared-Lorentzian tiling replaces every mode by
a defective ``2 × 2`` block whose spectral density is a squared Lorentzian.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import block_diag

from ..bath.parameters import PseudomodeBath
from ..bath.spectral import SpectralModel
from ..configuration.conf import resolve_settings
from ..exceptions import FactorizationError, ValidationError


logger = logging.getLogger(__name__)

RANK_ONE_TOL = 1e-8


class TilingVariant(str, Enum):
    """Mode shape used to tile the window."""

    LORENTZIAN = "lorentzian"
    SQUARED_LORENTZIAN = "squared-lorentzian"


@dataclass(frozen=True)
class TilingSpec:
    """Window ``[omega_min, omega_max]`` tiled by ``n`` pseudomodes."""

    omega_min: float
    omega_max: float
    n: int
    variant: TilingVariant = TilingVariant.LORENTZIAN

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", TilingVariant(self.variant))
        if not self.omega_max > self.omega_min:
            raise ValidationError(
                f"Tiling window needs omega_max > omega_min, got [{self.omega_min}, {self.omega_max}]"
            )
        if self.variant is TilingVariant.LORENTZIAN and self.n < 2:
            raise ValidationError("A Lorentzian tiling needs at least 2 modes")
        if self.variant is TilingVariant.SQUARED_LORENTZIAN and (self.n < 4 or self.n % 2):
            raise ValidationError("A squared-Lorentzian tiling needs an even mode count of at least 4")

    @property
    def sites(self) -> int:
        """Return the number of distinct centre energies."""
        return self.n if self.variant is TilingVariant.LORENTZIAN else self.n // 2

    @property
    def spacing(self) -> float:
        """Return the distance between neighbouring centres (``γ`` or ``δ``)."""
        return (self.omega_max - self.omega_min) / (self.sites - 1)

    @property
    def centers(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.sites)

    def interior(self, widths: float | None = None) -> tuple[float, float]:
        """Return the part of the window free of edge effects."""
        margin = (widths if widths is not None else resolve_settings(None).interior_widths) * self.spacing
        return self.omega_min + margin, self.omega_max - margin


def _require(spec: TilingSpec, variant: TilingVariant) -> None:
    if spec.variant is not variant:
        raise ValidationError(f"Expected a {variant.value} tiling, got {spec.variant.value}")


def _rank_one_column(matrix: np.ndarray, weight: float, epsilon: float) -> np.ndarray:
    """Return a real ``z`` with ``z zᵀ = weight · matrix`` or raise ``FactorizationError``."""
    values, vectors = np.linalg.eigh(matrix)
    scale = float(np.abs(values).max())
    if scale == 0.0:
        return np.zeros(matrix.shape[0])
    cutoff = RANK_ONE_TOL * scale
    if values[0] < -cutoff:
        raise FactorizationError(
            f"J({epsilon:.6g}) is not positive semidefinite (eigenvalue {values[0]:.3e})",
            epsilon=epsilon,
        )
    if np.any(np.abs(values[:-1]) > cutoff):
        raise FactorizationError(
            f"J({epsilon:.6g}) has rank above one and cannot be split into one real column",
            epsilon=epsilon,
        )
    column = math.sqrt(values[-1] * weight) * vectors[:, -1]
    if column[np.argmax(np.abs(column))] < 0.0:
        column = -column
    return column


def _couplings(model: SpectralModel, spec: TilingSpec, weight: float) -> np.ndarray:
    centers = spec.centers
    values = model.evaluate_grid(centers)
    return np.stack(
        [_rank_one_column(values[k], weight, float(centers[k])) for k in range(centers.size)]
    )


def diagonal_tiling(model: SpectralModel, spec: TilingSpec) -> PseudomodeBath:
    """Tile the window by Lorentzian modes with ``ζ_k ζ_kᵀ = J(ε_k) γ / 2π``."""
    _require(spec, TilingVariant.LORENTZIAN)
    gamma = spec.spacing
    zeta = _couplings(model, spec, gamma / (2.0 * math.pi))
    logger.debug(
        "Lorentzian tiling built",
        extra={"modes": spec.n, "gamma": gamma, "window": (spec.omega_min, spec.omega_max)},
    )
    return PseudomodeBath.diagonal(spec.centers, np.full(spec.n, gamma), zeta)


def nd_tiling(model: SpectralModel, spec: TilingSpec) -> PseudomodeBath:
    """Tile the window by defective ``2 × 2`` blocks.

    Block ``q`` has ``Λ = [[ε_q, δ], [δ, ε_q]]`` and ``Γ = diag(0, 4δ)``; only
    its first mode couples to the system, with ``ζ ζᵀ = J(ε_q) δ / 2π``.
    """
    _require(spec, TilingVariant.SQUARED_LORENTZIAN)
    delta = spec.spacing
    first = _couplings(model, spec, delta / (2.0 * math.pi))
    blocks = [np.array([[eps, delta], [delta, eps]]) for eps in spec.centers]
    zeta = np.zeros((spec.n, model.dim))
    zeta[0::2] = first
    rates = np.tile([0.0, 4.0 * delta], spec.sites)
    logger.debug(
        "Squared-Lorentzian tiling built",
        extra={"modes": spec.n, "delta": delta, "window": (spec.omega_min, spec.omega_max)},
    )
    return PseudomodeBath(lam=block_diag(*blocks), rates=rates, zeta=zeta)


def tiling_spectral_density(
    model: SpectralModel, spec: TilingSpec, omegas: np.ndarray
) -> np.ndarray:
    """Return the tiling's ``J_eff`` on ``omegas`` as a sum over mode profiles."""
    grid = np.asarray(omegas, dtype=float)
    centers = spec.centers
    weights = model.evaluate_grid(centers)
    x = grid[:, None] - centers[None, :]
    h = spec.spacing
    if spec.variant is TilingVariant.LORENTZIAN:
        profile = h * h / (2.0 * math.pi * (x * x + 0.25 * h * h))
    else:
        profile = 4.0 * h**4 / (2.0 * math.pi * (x * x + h * h) ** 2)
    return np.einsum("wk,kij->wij", profile, weights)


__all__ = [
    "RANK_ONE_TOL",
    "TilingVariant",
    "TilingSpec",
    "diagonal_tiling",
    "nd_tiling",
    "tiling_spectral_density",
]


# The End
