# -*- coding: utf-8 -*-
"""
kernel

Effective memory kernels ``χ(t) = ζ† e^{Wt} ζ`` of pseudomode baths.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from typing import Iterable

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from ..bath.parameters import PseudomodeBath
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import IntegrationError, ValidationError
from .classify import WKind, classify_w


logger = logging.getLogger(__name__)


def build_w(bath: PseudomodeBath) -> np.ndarray:
    """Return ``W = -iΛ - Γ/2`` as a fresh writable array."""
    return np.array(bath.w, dtype=complex)


def _adjoint(values: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(values, -1, -2))


def generator_kernel(w: np.ndarray, zeta: np.ndarray, t: float) -> np.ndarray:
    """Return ``ζ† e^{Wt} ζ`` for any generator, with ``χ(-t) = χ(t)†``."""
    generator = np.asarray(w, dtype=complex)
    couplings = np.asarray(zeta, dtype=complex)
    if couplings.ndim == 1:
        couplings = couplings[:, None]
    if generator.shape[0] != couplings.shape[0]:
        raise ValidationError(
            f"ζ has {couplings.shape[0]} rows but W has {generator.shape[0]} modes"
        )
    value = couplings.conj().T @ expm(abs(float(t)) * generator) @ couplings
    return value if t >= 0 else _adjoint(value)


def effective_kernel(bath: PseudomodeBath, t: float) -> np.ndarray:
    """Return the effective memory kernel at ``t`` (either sign)."""
    return generator_kernel(bath.w, bath.zeta, t)


def effective_kernel_series(
    bath: PseudomodeBath,
    times: Iterable[float],
    *,
    settings: PseudomodeSettings | None = None,
) -> np.ndarray:
    """Return ``χ`` on ``times`` as ``(m, n_S, n_S)``.

    Well-conditioned diagonalizable generators go through their eigenvectors;
    everything else uses batched scaling-and-squaring.
    """
    config = resolve_settings(settings)
    grid = np.asarray(list(times), dtype=float)
    magnitude = np.abs(grid)
    zeta = bath.zeta
    kind = classify_w(bath.w, settings=config)
    eigen_path = kind.kind is WKind.DIAGONAL or (
        kind.kind is WKind.DIAGONALIZABLE and kind.condition < config.eigen_path_cond
    )
    if eigen_path:
        left = zeta.conj().T @ kind.similarity
        right = np.linalg.solve(kind.similarity, zeta)
        phases = np.exp(np.outer(magnitude, kind.eigenvalues))
        values = np.einsum("ik,mk,kj->mij", left, phases, right)
    else:
        propagators = expm(magnitude[:, None, None] * bath.w[None, :, :])
        values = np.einsum("ki,mkl,lj->mij", zeta.conj(), propagators, zeta)
    logger.debug(
        "Effective kernel sweep",
        extra={"points": grid.size, "eigen_path": eigen_path, "kind": kind.kind.value},
    )
    negative = grid < 0
    values[negative] = _adjoint(values[negative])
    return values


def effective_kernel_ode_oracle(
    bath: PseudomodeBath,
    t: float,
    *,
    settings: PseudomodeSettings | None = None,
) -> np.ndarray:
    """Integrate ``dV/dt = W V`` from ``V(0) = I`` and return ``ζ† V(t) ζ``.

    The propagator is advanced with an explicit Runge-Kutta scheme, so the
    result does not depend on any matrix-function routine.
    """
    if t < 0:
        raise ValidationError("The ODE oracle is defined for t ≥ 0 only")
    config = resolve_settings(settings)
    zeta = bath.zeta
    if t == 0:
        return zeta.conj().T @ zeta
    generator = bath.w
    n = bath.n

    def rhs(_: float, state: np.ndarray) -> np.ndarray:
        return (generator @ state.reshape(n, n)).ravel()

    solution = solve_ivp(
        rhs,
        (0.0, float(t)),
        np.eye(n, dtype=complex).ravel(),
        method="DOP853",
        rtol=config.ode_rtol,
        atol=config.ode_atol,
    )
    if not solution.success:
        raise IntegrationError(f"ODE integration failed at t={t!r}: {solution.message}")
    propagator = solution.y[:, -1].reshape(n, n)
    return zeta.conj().T @ propagator @ zeta


__all__ = [
    "build_w",
    "generator_kernel",
    "effective_kernel",
    "effective_kernel_series",
    "effective_kernel_ode_oracle",
]


# The End
