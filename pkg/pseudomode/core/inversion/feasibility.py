# -*- coding: utf-8 -*-
"""
feasibility

Closed-form analysis of symmetric two-mode fits.

A symmetric fit has amplitudes ``α ± iβ`` at energies ``±ε`` with a common
rate ``γ``.  Inverting it with ``u = (1, 1)`` leaves one real parameter
``a′``; the residual rates are ``γ ± 2|ε| sqrt(a′² + β²) / sqrt(α² + 2a′α - β²)``.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..bath.fits import ExpFit
from ..exceptions import ValidationError


@dataclass(frozen=True)
class TwoModeFeasibility:
    """Whether some ``a′`` yields non-negative rates, with the admissible interval."""

    feasible: bool
    interval: tuple[float, float] | None = None

    @property
    def witness(self) -> float | None:
        """Return an interior ``a′`` of the admissible interval."""
        if self.interval is None:
            return None
        lo, hi = self.interval
        if math.isinf(hi):
            return lo + max(1.0, abs(lo))
        return 0.5 * (lo + hi)


def _check(alpha: float, gamma: float) -> None:
    if not alpha > 0.0:
        raise ValidationError("A symmetric two-mode fit needs α > 0")
    if not gamma > 0.0:
        raise ValidationError("A symmetric two-mode fit needs γ > 0")


def two_mode_fit(alpha: float, beta: float, epsilon: float, gamma: float) -> ExpFit:
    """Return the symmetric fit with amplitudes ``α ± iβ`` at energies ``±ε``."""
    _check(alpha, gamma)
    return ExpFit.from_arrays(
        [complex(alpha, beta), complex(alpha, -beta)], [epsilon, -epsilon], [gamma, gamma]
    )


def two_mode_feasibility(alpha: float, beta: float, epsilon: float, gamma: float) -> TwoModeFeasibility:
    """Return feasibility, which holds iff ``α²γ² > 4β²ε²``."""
    _check(alpha, gamma)
    margin = alpha**2 * gamma**2 - 4.0 * beta**2 * epsilon**2
    if not margin > 0.0:
        return TwoModeFeasibility(feasible=False)
    if epsilon == 0.0:
        return TwoModeFeasibility(True, ((beta**2 - alpha**2) / (2.0 * alpha), math.inf))
    radical = math.sqrt((gamma**2 + 4.0 * epsilon**2) * margin)
    scale = 4.0 * epsilon**2
    lo = (alpha * gamma**2 - radical) / scale
    hi = (alpha * gamma**2 + radical) / scale
    return TwoModeFeasibility(True, (lo, hi))


def two_mode_rates(
    alpha: float, beta: float, epsilon: float, gamma: float, a_prime: float
) -> tuple[float, float]:
    """Return the residual rates ``(γ - r, γ + r)`` produced by ``a′``."""
    _check(alpha, gamma)
    determinant = alpha**2 + 2.0 * a_prime * alpha - beta**2
    if not determinant > 0.0:
        raise ValidationError(f"a′ = {a_prime!r} does not give a positive S†S")
    spread = 2.0 * abs(epsilon) * math.sqrt(a_prime**2 + beta**2) / math.sqrt(determinant)
    return gamma - spread, gamma + spread


def two_mode_symmetric_density(
    alpha: float, beta: float, epsilon: float, gamma: float, omega: np.ndarray | float
) -> np.ndarray:
    """Return the spectral density of :func:`two_mode_fit`."""
    w = np.asarray(omega, dtype=float)
    quarter = 0.25 * gamma**2
    upper = w - epsilon
    lower = w + epsilon
    return (alpha * gamma - 2.0 * beta * upper) / (upper**2 + quarter) + (
        alpha * gamma + 2.0 * beta * lower
    ) / (lower**2 + quarter)


__all__ = [
    "TwoModeFeasibility",
    "two_mode_fit",
    "two_mode_feasibility",
    "two_mode_rates",
    "two_mode_symmetric_density",
]


# The End
