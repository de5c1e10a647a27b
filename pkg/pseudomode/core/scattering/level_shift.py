# -*- coding: utf-8 -*-
"""
level_shift

Level shifts and retarded self-energies of leads.

``Υ(ω) = P∫ dΩ/2π J(Ω) / (ω - Ω)``.  Families with a closed form use it;
otherwise the principal value is taken by subtracting ``J(ω)`` on the
symmetric interval ``[ω - h, ω + h]``, where the subtracted term integrates
to zero, and integrating the regular remainder with adaptive quadrature.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import math
import warnings
from typing import Callable, Literal

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from ..bath.fits import ExpFit
from ..bath.parameters import PseudomodeBath
from ..bath.spectral import SpectralModel
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import QuadratureError, ValidationError
from ..forward.density import resolvent_sandwich


logger = logging.getLogger(__name__)

ShiftMethod = Literal["auto", "quadrature"]


def _integrate(
    function: Callable[[float], float],
    lo: float,
    hi: float,
    config: PseudomodeSettings,
    epsabs: float,
) -> tuple[float, float]:
    if not hi > lo:
        return 0.0, 0.0
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, error = quad(
            function, lo, hi, epsabs=epsabs, epsrel=1e-12, limit=config.quadrature_limit
        )[:2]
    for item in caught:
        logger.debug("Level-shift quadrature reported: %s", item.message, extra={"lo": lo, "hi": hi})
    return value, error


def _principal_value(
    density: Callable[[float], float],
    omega: float,
    limits: tuple[float, float],
    width: float,
    config: PseudomodeSettings,
    epsabs: float,
) -> tuple[float, float]:
    """Return ``P∫ density(Ω)/(ω - Ω) dΩ`` over ``limits`` with an error estimate."""
    lo, hi = limits
    if omega < lo or omega > hi:
        return _integrate(lambda x: density(x) / (omega - x), lo, hi, config, epsabs)
    centre = density(omega)
    if omega in (lo, hi):
        if centre != 0.0:
            raise ValidationError(f"Level shift diverges at the band edge ω={omega!r}")
        return _integrate(lambda x: density(x) / (omega - x), lo, hi, config, epsabs)
    half = min(omega - lo, hi - omega, width)

    def regular(x: float) -> float:
        if x == omega:
            return 0.0
        return (density(x) - centre) / (omega - x)

    pieces = [
        _integrate(regular, omega - half, omega + half, config, epsabs),
        _integrate(lambda x: density(x) / (omega - x), lo, omega - half, config, epsabs),
        _integrate(lambda x: density(x) / (omega - x), omega + half, hi, config, epsabs),
    ]
    return sum(value for value, _ in pieces), sum(error for _, error in pieces)


def _model_level_shift(
    model: SpectralModel, omega: float, method: ShiftMethod, config: PseudomodeSettings
) -> np.ndarray:
    if method == "auto":
        closed = model.level_shift_closed_form(omega)
        if closed is not None:
            return np.asarray(closed, dtype=float)
    limits = model.integration_limits()
    width = model.bandwidth()
    scale = max(float(np.abs(model.zeroth_moment()).max()), 1e-300)
    epsabs = 1e-3 * config.quadrature_tol * 2.0 * math.pi * scale
    result = np.zeros((model.dim, model.dim))
    for i in range(model.dim):
        for j in range(i, model.dim):
            value, error = _principal_value(model.element(i, j), omega, limits, width, config, epsabs)
            if error / (2.0 * math.pi) > config.quadrature_tol * scale:
                raise QuadratureError(
                    f"Level shift at ω={omega!r} did not converge (error {error:.3e})",
                    estimate=error,
                )
            result[i, j] = result[j, i] = value / (2.0 * math.pi)
    logger.debug(
        "Level shift by quadrature",
        extra={"omega": omega, "dim": model.dim, "limits": limits},
    )
    return result


def _hermitian_part(matrix: np.ndarray) -> np.ndarray:
    return 0.5 * (matrix + np.conj(np.swapaxes(matrix, -1, -2)))


def pseudomode_self_energy(bath: PseudomodeBath, omega: float) -> np.ndarray:
    """Return ``ζ† (ω - iW)⁻¹ ζ``."""
    return -resolvent_sandwich(bath.w, bath.zeta, np.asarray([omega], dtype=float))[0]


def level_shift(
    source: SpectralModel | ExpFit | PseudomodeBath,
    omega: float,
    *,
    method: ShiftMethod = "auto",
    settings: PseudomodeSettings | None = None,
) -> np.ndarray:
    """Return ``Υ(ω)`` as an ``n_S × n_S`` Hermitian matrix.

    Exponential fits and pseudomode baths use the Hermitian part of their
    causal transform; spectral models use the closed form of their family or
    principal-value quadrature.
    """
    config = resolve_settings(settings)
    if isinstance(source, ExpFit):
        return _hermitian_part(source.self_energy_grid(np.asarray([omega]))[0])
    if isinstance(source, PseudomodeBath):
        return _hermitian_part(pseudomode_self_energy(source, omega))
    if method not in ("auto", "quadrature"):
        raise ValidationError(f"Unknown level-shift method {method!r}")
    return _model_level_shift(source, float(omega), method, config)


def self_energy(
    source: SpectralModel | ExpFit | PseudomodeBath,
    omega: float,
    *,
    settings: PseudomodeSettings | None = None,
) -> np.ndarray:
    """Return the retarded self-energy ``-iJ(ω)/2 + Υ(ω)``."""
    if isinstance(source, PseudomodeBath):
        return pseudomode_self_energy(source, omega)
    if isinstance(source, ExpFit):
        return source.self_energy_grid(np.asarray([omega]))[0]
    density = source.evaluate(omega)
    return -0.5j * density + level_shift(source, omega, settings=settings)


def spectral_density_at(source: SpectralModel | ExpFit, omega: float) -> np.ndarray:
    """Return ``J(ω)`` of a spectral model or exponential fit."""
    if isinstance(source, ExpFit):
        return source.spectral_density(omega)
    return source.evaluate(omega).astype(complex)


__all__ = [
    "ShiftMethod",
    "level_shift",
    "pseudomode_self_energy",
    "self_energy",
    "spectral_density_at",
]


# The End
