# -*- coding: utf-8 -*-
"""
kernels

Memory kernels and thermal correlation functions of physical baths.

``χ(t) = ∫ dω/2π J(ω) e^{-iωt}`` uses the closed form of the family when one
exists and adaptive oscillatory quadrature otherwise.  Finite segments go
through the Fourier-weighted QUADPACK rule, infinite tails through the
Fourier-integral rule.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Literal

import numpy as np
from scipy.integrate import IntegrationWarning, quad, simpson

from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import QuadratureError, ValidationError
from .fermi import FermiSpec
from .spectral import QuadratureSegment, SpectralModel


logger = logging.getLogger(__name__)

KernelMethod = Literal["auto", "quadrature"]

_TWO_PI = 2.0 * math.pi


def _quad(
    function: Callable[[float], float],
    lo: float,
    hi: float,
    config: PseudomodeSettings,
    epsabs: float,
    **options,
) -> tuple[float, float]:
    """Run ``scipy.integrate.quad`` and demote its warnings to debug records."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, error = quad(
            function,
            lo,
            hi,
            epsabs=epsabs,
            epsrel=1e-12,
            limit=config.quadrature_limit,
            **options,
        )[:2]
    for item in caught:
        logger.debug(
            "Quadrature reported: %s",
            item.message,
            extra={"lo": lo, "hi": hi, "weight": options.get("weight")},
        )
    return value, error


def _segment_transform(
    segment: QuadratureSegment,
    t: float,
    weight: Callable[[float], float] | None,
    config: PseudomodeSettings,
    epsabs: float,
) -> tuple[complex, float]:
    """Return ``∫ J(ω) w(ω) e^{iωt} dω`` over one segment with its error estimate."""
    if weight is None:
        weight = _unit

    if segment.mapped:

        def real(theta: float) -> float:
            omega = segment.at(theta)
            return segment.density(theta) * weight(omega) * math.cos(omega * t)

        def imag(theta: float) -> float:
            omega = segment.at(theta)
            return segment.density(theta) * weight(omega) * math.sin(omega * t)

        re, re_err = _quad(real, segment.lo, segment.hi, config, epsabs)
        if t == 0.0:
            return complex(re), re_err
        im, im_err = _quad(imag, segment.lo, segment.hi, config, epsabs)
        return complex(re, im), re_err + im_err

    def plain(omega: float) -> float:
        return segment.density(omega) * weight(omega)

    if t == 0.0:
        re, re_err = _quad(plain, segment.lo, segment.hi, config, epsabs)
        return complex(re), re_err

    tau = abs(t)
    sign = math.copysign(1.0, t)
    lo, hi, function = segment.lo, segment.hi, plain
    if math.isinf(lo):
        # ω = -u maps the lower tail onto [-hi, ∞) and flips the sine.
        lo, hi, function = -segment.hi, math.inf, (lambda u: plain(-u))
        sign = -sign
    re, re_err = _quad(function, lo, hi, config, epsabs, weight="cos", wvar=tau)
    im, im_err = _quad(function, lo, hi, config, epsabs, weight="sin", wvar=tau)
    return complex(re, sign * im), re_err + im_err


def _unit(omega: float) -> float:
    return 1.0


def _fourier_matrix(
    model: SpectralModel,
    t: float,
    weight: Callable[[float], float] | None,
    config: PseudomodeSettings,
    splits: Iterable[float] = (),
) -> np.ndarray:
    """Return ``∫ dω/2π J(ω) w(ω) e^{iωt}`` element by element."""
    scale = max(float(np.abs(model.zeroth_moment()).max()), 1e-300)
    epsabs = 1e-3 * config.quadrature_tol * _TWO_PI * scale
    cuts = [cut for cut in splits if np.isfinite(cut)]
    n = model.dim
    result = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            segments = model.element_segments(i, j)
            for cut in cuts:
                segments = [piece for segment in segments for piece in segment.split(cut)]
            value, error = 0.0j, 0.0
            for segment in segments:
                part, part_error = _segment_transform(segment, t, weight, config, epsabs)
                value += part
                error += part_error
            if error / _TWO_PI > config.quadrature_tol * scale:
                raise QuadratureError(
                    f"Quadrature of J[{i},{j}] at t={t!r} did not converge",
                    estimate=error / _TWO_PI,
                )
            result[i, j] = result[j, i] = value / _TWO_PI
    return result


def _check_method(method: str) -> None:
    if method not in ("auto", "quadrature"):
        raise ValidationError(f"Unknown kernel method {method!r}; use 'auto' or 'quadrature'")


def memory_kernel(
    model: SpectralModel,
    t: float,
    *,
    method: KernelMethod = "auto",
    settings: PseudomodeSettings | None = None,
) -> np.ndarray:
    """Return ``χ(t)`` as a complex ``n_S × n_S`` matrix.

    ``method="quadrature"`` bypasses the closed form of the family.
    """
    _check_method(method)
    t = float(t)
    if method == "auto":
        closed = model.kernel_closed_form(t)
        if closed is not None:
            return closed
    config = resolve_settings(settings)
    return _fourier_matrix(model, -t, None, config)


def memory_kernel_series(
    model: SpectralModel,
    times: Iterable[float],
    *,
    method: KernelMethod = "auto",
    settings: PseudomodeSettings | None = None,
) -> np.ndarray:
    """Return ``χ`` on ``times`` as ``(m, n_S, n_S)``, fanning out over worker threads."""
    _check_method(method)
    config = resolve_settings(settings)
    grid = [float(t) for t in times]

    def one(t: float) -> np.ndarray:
        return memory_kernel(model, t, method=method, settings=config)

    if config.threads > 1 and len(grid) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as executor:
            values = list(executor.map(one, grid))
    else:
        values = [one(t) for t in grid]
    if not values:
        return np.zeros((0, model.dim, model.dim), dtype=complex)
    return np.stack(values)


def correlation_pair(
    model: SpectralModel,
    fermi: FermiSpec,
    t: float,
    *,
    settings: PseudomodeSettings | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(C⁺(t), C⁻(t))``.

    ``C⁺ = ∫ dω/2π e^{iωt} J f`` and ``C⁻ = ∫ dω/2π e^{iωt} J (1 - f)``, so
    their sum is ``χ(-t)``.
    """
    config = resolve_settings(settings)
    t = float(t)
    zero = np.zeros((model.dim, model.dim), dtype=complex)
    if fermi.empty:
        return zero, memory_kernel(model, -t, settings=config)
    if fermi.filled:
        return memory_kernel(model, -t, settings=config), zero

    def occupied(omega: float) -> float:
        return float(fermi.occupation(omega))

    def vacant(omega: float) -> float:
        return 1.0 - float(fermi.occupation(omega))

    splits = (fermi.mu,)
    plus = _fourier_matrix(model, t, occupied, config, splits)
    minus = _fourier_matrix(model, t, vacant, config, splits)
    logger.debug(
        "Correlation pair evaluated",
        extra={"t": t, "beta": fermi.beta, "mu": fermi.mu, "dim": model.dim},
    )
    return plus, minus


def kernel_symmetry_extend(
    times: Iterable[float], values: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Extend samples on ``t ≥ 0`` to negative times with ``χ(-t) = χ(t)†``."""
    grid = np.asarray(list(times), dtype=float)
    data = np.asarray(values, dtype=complex)
    if data.ndim == 1:
        data = data[:, None, None]
    if grid.size == 0 or grid[0] != 0.0 or np.any(np.diff(grid) <= 0.0):
        raise ValidationError("Kernel samples must start at t = 0 and increase strictly")
    if data.shape[0] != grid.size:
        raise ValidationError(f"Expected {grid.size} kernel samples, got {data.shape[0]}")
    mirrored = np.conj(np.swapaxes(data[:0:-1], 1, 2))
    return np.concatenate([-grid[:0:-1], grid]), np.concatenate([mirrored, data])


def kernel_fourier_transform(
    kernel: Callable[[np.ndarray], np.ndarray],
    omegas: Iterable[float],
    t_max: float,
    *,
    points: int = 16385,
) -> np.ndarray:
    """Return ``∫ dt χ(t) e^{iωt}`` on ``omegas`` from a kernel sampled on ``[0, t_max]``.

    ``kernel`` maps an array of times to ``(m, n, n)`` values, for example
    ``ExpFit.kernel_series``.  The negative half-axis enters through the
    adjoint, so the transform is Hermitian.
    """
    if not t_max > 0.0 or points < 3:
        raise ValidationError("kernel_fourier_transform needs t_max > 0 and at least 3 points")
    times = np.linspace(0.0, float(t_max), int(points))
    values = np.asarray(kernel(times), dtype=complex)
    if values.ndim == 1:
        values = values[:, None, None]
    frequencies = np.asarray(list(omegas), dtype=float)
    phase = np.exp(1j * np.outer(frequencies, times))[:, :, None, None]
    half = simpson(phase * values[None, :, :, :], x=times, axis=1)
    return half + np.conj(np.swapaxes(half, 1, 2))


__all__ = [
    "KernelMethod",
    "memory_kernel",
    "memory_kernel_series",
    "correlation_pair",
    "kernel_symmetry_extend",
    "kernel_fourier_transform",
]


# The End
