# -*- coding: utf-8 -*-
"""
factors

Infinite-tiling error factors of the Lorentzian and squared-Lorentzian tilings.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math

import numpy as np

DEFAULT_SERIES_TERMS = 100_000


def eta1(r: np.ndarray | float) -> np.ndarray | float:
    """Return ``sinh π / (cosh π - cos 2πr)``; ``eta1(0) = coth(π/2)``."""
    value = math.sinh(math.pi) / (math.cosh(math.pi) - np.cos(2.0 * math.pi * np.asarray(r)))
    return float(value) if np.ndim(value) == 0 else value


def eta2(r: np.ndarray | float) -> np.ndarray | float:
    """Return ``(2/π) Σ_ℓ 1/((ℓ + r)² + 1)²`` in closed form."""
    c = np.cos(2.0 * math.pi * np.asarray(r, dtype=float))
    ch = math.cosh(2.0 * math.pi)
    sh = math.sinh(2.0 * math.pi)
    numerator = c * (4.0 * math.pi * ch - 2.0 * sh) - 4.0 * math.pi + math.sinh(4.0 * math.pi)
    value = numerator / (2.0 * (c - ch) ** 2)
    return float(value) if np.ndim(value) == 0 else value


def _offsets(r: float, terms: int) -> tuple[np.ndarray, float, float]:
    ell = np.arange(-terms, terms + 1, dtype=float)
    return ell + r, terms + 0.5 + r, terms + 0.5 - r


def eta1_series(r: float, terms: int = DEFAULT_SERIES_TERMS) -> float:
    """Sum ``(1/2π) Σ_{|ℓ|≤K} 1/((ℓ + r)² + 1/4)`` and add the integral tails."""
    x, upper, lower = _offsets(float(r), int(terms))
    half = 0.5
    body = float(np.sum(1.0 / (x * x + half * half)))
    tails = sum((math.pi / 2.0 - math.atan(c / half)) / half for c in (upper, lower))
    return (body + tails) / (2.0 * math.pi)


def eta2_series(r: float, terms: int = DEFAULT_SERIES_TERMS) -> float:
    """Sum ``(2/π) Σ_{|ℓ|≤K} 1/((ℓ + r)² + 1)²`` and add the integral tails."""
    x, upper, lower = _offsets(float(r), int(terms))
    body = float(np.sum(1.0 / (x * x + 1.0) ** 2))
    tails = sum(
        math.pi / 4.0 - c / (2.0 * (c * c + 1.0)) - math.atan(c) / 2.0 for c in (upper, lower)
    )
    return 2.0 / math.pi * (body + tails)


__all__ = ["DEFAULT_SERIES_TERMS", "eta1", "eta2", "eta1_series", "eta2_series"]


# The End
