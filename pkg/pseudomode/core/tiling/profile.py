# -*- coding: utf-8 -*-
"""
profile

Comparison of a tiling's effective density with the infinite-tiling prediction.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..bath.spectral import SpectralModel
from ..exceptions import ValidationError
from .constructions import TilingSpec, TilingVariant, tiling_spectral_density
from .factors import eta1, eta2


logger = logging.getLogger(__name__)

PROFILE_COLUMNS = ("omega", "J", "J_eff", "ratio", "eta_pred")


@dataclass(frozen=True, eq=False)
class TilingProfile:
    """Columns of a tiling error profile; ``ratio`` is NaN where ``J ≤ 0``."""

    spec: TilingSpec
    omega: np.ndarray
    target: np.ndarray
    effective: np.ndarray
    ratio: np.ndarray
    predicted: np.ndarray

    def rows(self) -> Iterator[tuple[float, ...]]:
        yield from zip(
            self.omega, self.target, self.effective, self.ratio, self.predicted
        )

    def interior_mask(self, widths: float | None = None) -> np.ndarray:
        lo, hi = self.spec.interior(widths)
        return (self.omega >= lo) & (self.omega <= hi) & np.isfinite(self.ratio)

    def discrepancy(self) -> np.ndarray:
        """Return ``|ratio - η(r)|`` pointwise."""
        return np.abs(self.ratio - self.predicted)

    def max_interior_deviation(self, widths: float | None = None) -> float:
        """Return ``max |ratio - 1|`` inside the interior of the window."""
        mask = self.interior_mask(widths)
        if not mask.any():
            return float("nan")
        return float(np.max(np.abs(self.ratio[mask] - 1.0)))


def predicted_factor(spec: TilingSpec, omegas: np.ndarray) -> np.ndarray:
    """Return ``η(r)`` with ``r`` the fractional offset from the tiling centres."""
    r = np.mod((np.asarray(omegas, dtype=float) - spec.omega_min) / spec.spacing, 1.0)
    if spec.variant is TilingVariant.LORENTZIAN:
        return np.asarray(eta1(r))
    return np.asarray(eta2(r))


def tiling_error_profile(
    model: SpectralModel,
    spec: TilingSpec,
    grid: np.ndarray,
    *,
    element: tuple[int, int] = (0, 0),
) -> TilingProfile:
    """Tabulate ``J``, the tiling's ``J_eff``, their ratio and ``η(r)`` on ``grid``."""
    omegas = np.asarray(grid, dtype=float)
    if omegas.ndim != 1 or omegas.size == 0:
        raise ValidationError("Profile grid must be a non-empty 1-D array")
    i, j = element
    if not (0 <= i < model.dim and 0 <= j < model.dim):
        raise ValidationError(f"Element {element!r} is outside a {model.dim}-site density")
    target = model.evaluate_grid(omegas)[:, i, j]
    effective = tiling_spectral_density(model, spec, omegas)[:, i, j]
    ratio = np.full_like(target, np.nan)
    positive = target > 0.0
    ratio[positive] = effective[positive] / target[positive]
    profile = TilingProfile(
        spec=spec,
        omega=omegas,
        target=target,
        effective=effective,
        ratio=ratio,
        predicted=predicted_factor(spec, omegas),
    )
    logger.debug(
        "Tiling profile computed",
        extra={
            "points": omegas.size,
            "variant": spec.variant.value,
            "interior_deviation": profile.max_interior_deviation(),
        },
    )
    return profile


__all__ = ["PROFILE_COLUMNS", "TilingProfile", "predicted_factor", "tiling_error_profile"]


# The End
