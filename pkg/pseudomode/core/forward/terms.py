# -*- coding: utf-8 -*-
"""
terms

Closed-form term decompositions of effective memory kernels.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy import linalg

from ..bath.fits import ExpFit, ExpTerm
from ..bath.parameters import PseudomodeBath
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import ClassificationError
from .classify import EigenCluster, WClass, WKind, classify_w


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class KernelTermDecomposition(ExpFit):
    """Exponential terms of ``ζ† e^{Wt} ζ`` together with the class of ``W``."""

    classification: WClass | None = None


@dataclass(frozen=True)
class TermContribution:
    """Lorentzian, Anti-Lorentzian and higher-order shares of one term on a grid."""

    index: int
    energy: float
    rate: float
    power: int
    lorentzian: np.ndarray
    anti_lorentzian: np.ndarray
    higher_order: np.ndarray

    @property
    def total(self) -> np.ndarray:
        return self.lorentzian + self.anti_lorentzian + self.higher_order


def _projector(shifted_power: np.ndarray, size: int) -> np.ndarray:
    """Return the spectral projector onto the generalized eigenspace of dimension ``size``."""
    left, _, right_h = linalg.svd(shifted_power)
    right_space = right_h[-size:].conj().T
    left_space = left[:, -size:]
    return right_space @ np.linalg.solve(left_space.conj().T @ right_space, left_space.conj().T)


def _defective_terms(
    w: np.ndarray,
    zeta: np.ndarray,
    clusters: Iterable[EigenCluster],
) -> list[ExpTerm]:
    n = w.shape[0]
    gram = float(np.linalg.norm(zeta) ** 2)
    cutoff = 1e-10 * max(gram, 1e-300)
    terms: list[ExpTerm] = []
    for cluster in clusters:
        size = cluster.multiplicity
        shifted = w - cluster.eigenvalue * np.eye(n)
        projector = _projector(np.linalg.matrix_power(shifted, size), size)
        nilpotent = np.eye(n, dtype=complex)
        for power in range(size):
            amplitude = zeta.conj().T @ nilpotent @ projector @ zeta / math.factorial(power)
            if power == 0 or np.linalg.norm(amplitude) > cutoff:
                terms.append(ExpTerm.from_exponent(amplitude, cluster.eigenvalue, power))
            nilpotent = nilpotent @ shifted
    return terms


def decompose_terms(
    bath: PseudomodeBath,
    *,
    settings: PseudomodeSettings | None = None,
) -> KernelTermDecomposition:
    """Expand ``ζ† e^{Wt} ζ`` into terms ``κ tᵖ e^{λt}``.

    Diagonal and diagonalizable generators give one power-0 term per
    eigenvalue.  Defective generators give, per eigenvalue cluster,
    ``κ_p = ζ† (W - λ)ᵖ P_λ ζ / p!`` with the spectral projector ``P_λ``;
    negligible higher powers are dropped.
    """
    config = resolve_settings(settings)
    w = bath.w
    zeta = bath.zeta
    kind = classify_w(w, settings=config)
    if kind.kind is WKind.DIAGONAL:
        terms = [
            ExpTerm.from_exponent(np.outer(zeta[k].conj(), zeta[k]), complex(kind.eigenvalues[k]))
            for k in range(bath.n)
        ]
    elif kind.kind is WKind.DIAGONALIZABLE:
        left = zeta.conj().T @ kind.similarity
        right = np.linalg.solve(kind.similarity, zeta)
        terms = [
            ExpTerm.from_exponent(np.outer(left[:, k], right[k]), complex(kind.eigenvalues[k]))
            for k in range(bath.n)
        ]
    elif kind.kind is WKind.NON_DIAGONALIZABLE:
        terms = _defective_terms(w, zeta, kind.clusters)
    else:  # pragma: no cover - exhaustive enum
        raise ClassificationError(f"Unknown generator class {kind.kind!r}")
    logger.debug(
        "Kernel decomposed",
        extra={"kind": kind.kind.value, "terms": len(terms), "condition": kind.condition},
    )
    return KernelTermDecomposition(
        terms=tuple(terms), warnings=kind.warnings, classification=kind
    )


def spectral_density_from_terms(decomp: ExpFit, omega: float | Iterable[float]) -> np.ndarray:
    """Return ``J`` from a term list at a frequency or on a grid."""
    if np.ndim(omega) == 0:
        return decomp.spectral_density(float(omega))
    return decomp.spectral_density_grid(np.asarray(list(omega), dtype=float))


def term_contributions(decomp: ExpFit, omegas: Iterable[float]) -> list[TermContribution]:
    """Split every term of ``decomp`` into its spectral shares on ``omegas``."""
    grid = np.asarray(list(omegas), dtype=float)
    shares = []
    for index, term in enumerate(decomp.terms):
        if term.power:
            zero = np.zeros((grid.size,) + term.amplitude.shape, dtype=complex)
            lorentzian, anti, higher = zero, zero, term.spectral_contribution(grid)
        else:
            lorentzian = term.lorentzian_part(grid).astype(complex)
            anti = term.anti_lorentzian_part(grid).astype(complex)
            higher = np.zeros_like(lorentzian)
        shares.append(
            TermContribution(index, term.energy, term.rate, term.power, lorentzian, anti, higher)
        )
    return shares


__all__ = [
    "KernelTermDecomposition",
    "TermContribution",
    "decompose_terms",
    "spectral_density_from_terms",
    "term_contributions",
]


# The End
