# -*- coding: utf-8 -*-
"""
classify

Classification of pseudomode generators ``W`` into diagonal, diagonalizable
and defective matrices.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import linalg

from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import ClassificationError, ValidationError


logger = logging.getLogger(__name__)


class WKind(str, Enum):
    """Matrix class of a generator."""

    DIAGONAL = "diagonal"
    DIAGONALIZABLE = "diagonalizable"
    NON_DIAGONALIZABLE = "non-diagonalizable"


@dataclass(frozen=True)
class EigenCluster:
    """Numerically coincident eigenvalues with their Jordan block sizes."""

    eigenvalue: complex
    multiplicity: int
    blocks: tuple[int, ...]

    @property
    def defective(self) -> bool:
        return any(size > 1 for size in self.blocks)


@dataclass(frozen=True, eq=False)
class WClass:
    """Result of :func:`classify_w`.

    ``similarity`` and ``eigenvalues`` satisfy ``W = S M S⁻¹`` for the
    diagonal and diagonalizable classes.  Defective generators carry their
    eigenvalue clusters instead.
    """

    kind: WKind
    eigenvalues: np.ndarray
    clusters: tuple[EigenCluster, ...]
    similarity: np.ndarray | None = None
    condition: float = 1.0
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def jordan_blocks(self) -> list[tuple[complex, int]]:
        """Return ``(eigenvalue, size)`` for every Jordan block."""
        return [(cluster.eigenvalue, size) for cluster in self.clusters for size in cluster.blocks]

    @property
    def defective_blocks(self) -> list[tuple[complex, int]]:
        return [(value, size) for value, size in self.jordan_blocks if size > 1]

    @property
    def inverse_similarity(self) -> np.ndarray | None:
        if self.similarity is None:
            return None
        return np.linalg.inv(self.similarity)


def _cluster(values: np.ndarray, tolerance: float) -> list[list[int]]:
    """Group eigenvalue indices whose members lie within ``tolerance`` of a neighbour."""
    groups: list[list[int]] = []
    for index, value in enumerate(values):
        joined = [group for group in groups if np.min(np.abs(values[group] - value)) <= tolerance]
        if not joined:
            groups.append([index])
            continue
        merged = [index]
        for group in joined:
            merged.extend(group)
            groups.remove(group)
        groups.append(sorted(merged))
    return sorted(groups, key=lambda group: group[0])


def _rank(matrix: np.ndarray, cutoff: float) -> int:
    singular = linalg.svdvals(matrix)
    return int(np.sum(singular > cutoff))


def _jordan_blocks(
    matrix: np.ndarray,
    eigenvalue: complex,
    multiplicity: int,
    scale: float,
    config: PseudomodeSettings,
) -> tuple[int, ...]:
    """Return Jordan block sizes from the ranks of ``(W - λI)^k``."""
    n = matrix.shape[0]
    if multiplicity == 1:
        return (1,)
    shifted = matrix - eigenvalue * np.eye(n)
    ranks = [n]
    power = np.eye(n, dtype=complex)
    for k in range(1, multiplicity + 1):
        power = power @ shifted
        ranks.append(_rank(power, config.jordan_rank_tol * scale**k))
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, multiplicity + 1)] + [0]
    blocks: list[int] = []
    for k in range(1, multiplicity + 1):
        blocks.extend([k] * max(at_least[k - 1] - at_least[k], 0))
    if sum(blocks) < multiplicity:
        # split eigenvalues that merely fell inside the clustering radius
        blocks.extend([1] * (multiplicity - sum(blocks)))
    if sum(blocks) != multiplicity:
        raise ClassificationError(
            f"Jordan structure at λ={eigenvalue:.6g} is inconsistent: "
            f"ranks {ranks} for multiplicity {multiplicity}"
        )
    return tuple(sorted(blocks, reverse=True))


def classify_w(
    w: np.ndarray,
    tol: float | None = None,
    *,
    settings: PseudomodeSettings | None = None,
) -> WClass:
    """Classify ``W`` as diagonal, diagonalizable or non-diagonalizable.

    ``tol`` defaults to ``1 / diagonalizability_cond``.  Diagonalizable
    results whose eigenvector condition number lies within a factor of ten of
    ``1 / tol`` carry a warning.
    """
    config = resolve_settings(settings)
    matrix = np.asarray(w, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"W must be square, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ValidationError("W contains non-finite entries")
    tolerance = config.classify_tol if tol is None else float(tol)
    n = matrix.shape[0]
    norm = float(np.linalg.norm(matrix))
    diagonal = np.diag(matrix).copy()
    off_diagonal = float(np.linalg.norm(matrix - np.diag(diagonal)))

    if off_diagonal <= tolerance * norm:
        clusters = tuple(EigenCluster(complex(value), 1, (1,)) for value in diagonal)
        return WClass(WKind.DIAGONAL, diagonal, clusters, np.eye(n, dtype=complex))

    try:
        values, vectors = linalg.eig(matrix)
    except (linalg.LinAlgError, ValueError) as exc:
        raise ClassificationError(f"Eigen-solver failed on W: {exc}") from exc

    scale = max(norm, 1.0)
    groups = _cluster(values, config.cluster_tol * scale)
    clusters = []
    for group in groups:
        eigenvalue = complex(np.mean(values[group]))
        blocks = _jordan_blocks(matrix, eigenvalue, len(group), norm, config)
        clusters.append(EigenCluster(eigenvalue, len(group), blocks))
    clusters_t = tuple(clusters)

    if any(cluster.defective for cluster in clusters_t):
        logger.debug(
            "W classified as non-diagonalizable",
            extra={"modes": n, "blocks": [c.blocks for c in clusters_t]},
        )
        return WClass(WKind.NON_DIAGONALIZABLE, values, clusters_t)

    condition = float(np.linalg.cond(vectors))
    threshold = 1.0 / tolerance
    if not np.isfinite(condition) or condition >= threshold:
        raise ClassificationError(
            f"Eigenvector condition {condition:.3e} exceeds {threshold:.3e} "
            "but no Jordan block was resolved"
        )
    notes: tuple[str, ...] = ()
    if condition * 10.0 >= threshold:
        message = (
            f"Borderline classification: eigenvector condition {condition:.3e} "
            f"is within a factor of 10 of {threshold:.3e}"
        )
        logger.warning(message)
        notes = (message,)
    reconstruction = np.linalg.norm(vectors @ np.diag(values) @ np.linalg.inv(vectors) - matrix)
    logger.debug(
        "W classified as diagonalizable",
        extra={"modes": n, "condition": condition, "reconstruction": float(reconstruction)},
    )
    return WClass(WKind.DIAGONALIZABLE, values, clusters_t, vectors, condition, notes)


__all__ = ["WKind", "EigenCluster", "WClass", "classify_w"]


# The End
