# -*- coding: utf-8 -*-
"""
density

Effective spectral density of a pseudomode bath from its resolvent.

``J_eff(ω) = (X - X†)/i`` with ``X = ζ† (iW - ω)⁻¹ ζ``; on the diagonal this
is ``2 Im X_ii``.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from ..bath.parameters import PseudomodeBath
from ..exceptions import SingularResolventError


_SINGULAR_COND = 1e14


def resolvent_sandwich(w: np.ndarray, zeta: np.ndarray, omegas: np.ndarray) -> np.ndarray:
    """Return ``ζ† (iW - ω)⁻¹ ζ`` stacked over ``omegas``."""
    generator = np.asarray(w, dtype=complex)
    couplings = np.asarray(zeta, dtype=complex)
    grid = np.asarray(omegas, dtype=float)
    n = generator.shape[0]
    shifted = 1j * generator[None, :, :] - grid[:, None, None] * np.eye(n)[None, :, :]
    conditions = np.linalg.cond(shifted)
    bad = ~np.isfinite(conditions) | (conditions > _SINGULAR_COND)
    if np.any(bad):
        omega = float(grid[np.argmax(bad)])
        raise SingularResolventError(
            f"iW - ω is singular at ω={omega!r}", omega=omega
        )
    solved = np.linalg.solve(shifted, np.broadcast_to(couplings, (grid.size,) + couplings.shape))
    return np.einsum("ki,mkj->mij", couplings.conj(), solved)


def effective_spectral_density_grid(bath: PseudomodeBath, omegas: Iterable[float]) -> np.ndarray:
    """Return ``J_eff`` on ``omegas`` as ``(m, n_S, n_S)``; each slice is Hermitian."""
    grid = np.asarray(list(omegas), dtype=float)
    sandwich = resolvent_sandwich(bath.w, bath.zeta, grid)
    return -1j * (sandwich - np.conj(np.swapaxes(sandwich, 1, 2)))


def effective_spectral_density(bath: PseudomodeBath, omega: float) -> np.ndarray:
    """Return ``J_eff(ω)``; a singular resolvent raises ``SingularResolventError``."""
    return effective_spectral_density_grid(bath, [omega])[0]


__all__ = [
    "resolvent_sandwich",
    "effective_spectral_density",
    "effective_spectral_density_grid",
]


# The End
