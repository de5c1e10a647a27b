# -*- coding: utf-8 -*-
"""
takagi

Takagi factorization ``A = U diag(σ) Uᵀ`` of complex symmetric matrices.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math

import numpy as np
from scipy import linalg

from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import TakagiError


# irrational weight that separates the commuting real and imaginary parts
_MIX = math.sqrt(2.0) - 1.0 / math.pi


def _groups(sigma: np.ndarray, tolerance: float) -> list[list[int]]:
    groups: list[list[int]] = []
    for index, value in enumerate(sigma):
        if groups and abs(sigma[groups[-1][-1]] - value) <= tolerance:
            groups[-1].append(index)
        else:
            groups.append([index])
    return groups


def _symmetric_unitary_root(block: np.ndarray) -> np.ndarray:
    """Return unitary ``Q`` with ``Q Qᵀ = Z`` for a symmetric unitary ``Z``."""
    block = 0.5 * (block + block.T)
    _, rotation = np.linalg.eigh(block.real + _MIX * block.imag)
    diagonal = np.diag(rotation.T @ block @ rotation)
    phases = diagonal / np.abs(diagonal)
    return rotation * np.sqrt(phases)[None, :]


def takagi(
    matrix: np.ndarray,
    *,
    settings: PseudomodeSettings | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(U, σ)`` with ``A = U diag(σ) Uᵀ``, ``U`` unitary and ``σ`` descending.

    The factorization starts from the SVD ``A = X Σ Y†``.  Symmetry makes
    ``Z = X† conj(Y)`` block diagonal over groups of equal singular values,
    each block a symmetric unitary matrix whose square root fixes the phases.
    """
    config = resolve_settings(settings)
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise TakagiError(f"Takagi factorization needs a square matrix, got {a.shape}")
    scale = float(np.linalg.norm(a))
    if np.linalg.norm(a - a.T) > config.takagi_symmetry_tol * max(scale, 1e-300):
        raise TakagiError("Takagi factorization needs a complex symmetric matrix")
    left, sigma, right_h = linalg.svd(a)
    if scale == 0.0:
        return left, sigma
    phases = left.conj().T @ right_h.T
    unitary = np.array(left, dtype=complex)
    floor = 1e-13 * sigma[0]
    for group in _groups(sigma, 1e-9 * sigma[0]):
        if sigma[group[0]] <= floor:
            continue
        if len(group) == 1:
            k = group[0]
            phase = phases[k, k] / abs(phases[k, k])
            unitary[:, k] = left[:, k] * np.sqrt(phase)
            continue
        root = _symmetric_unitary_root(phases[np.ix_(group, group)])
        unitary[:, group] = left[:, group] @ root
    return unitary, sigma


__all__ = ["takagi"]


# The End
