# -*- coding: utf-8 -*-
"""
setup

Scattering geometry and transmission tables.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Union

import numpy as np

from ..bath.fits import ExpFit
from ..bath.parameters import PseudomodeBath
from ..bath.spectral import SpectralModel
from ..exceptions import ValidationError


logger = logging.getLogger(__name__)

TrueBath = Union[SpectralModel, ExpFit]
AnyBath = Union[SpectralModel, ExpFit, PseudomodeBath]

NEGATIVE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class Lead:
    """One labelled bath attached to the system."""

    label: str
    bath: AnyBath

    @property
    def dim(self) -> int:
        return self.bath.dim

    @property
    def pseudomode(self) -> bool:
        return isinstance(self.bath, PseudomodeBath)


@dataclass(frozen=True, eq=False)
class ScatterSetup:
    """Static system Hamiltonian ``H_S`` coupled to at least two leads."""

    h_s: np.ndarray
    leads: tuple[Lead, ...]

    def __post_init__(self) -> None:
        h_s = np.array(self.h_s, dtype=complex, ndmin=2)
        n = h_s.shape[0]
        if h_s.shape != (n, n):
            raise ValidationError(f"H_S must be square, got shape {h_s.shape}")
        scale = max(float(np.linalg.norm(h_s)), 1.0)
        if np.linalg.norm(h_s - h_s.conj().T) > 1e-12 * scale:
            raise ValidationError("H_S must be Hermitian")
        leads = tuple(self.leads)
        if len(leads) < 2:
            raise ValidationError("A scattering setup needs at least two leads")
        labels = [lead.label for lead in leads]
        if len(set(labels)) != len(labels):
            raise ValidationError(f"Lead labels must be unique, got {labels}")
        for lead in leads:
            if lead.dim != n:
                raise ValidationError(
                    f"Lead '{lead.label}' couples to {lead.dim} sites, the system has {n}"
                )
        h_s = 0.5 * (h_s + h_s.conj().T)
        h_s.setflags(write=False)
        object.__setattr__(self, "h_s", h_s)
        object.__setattr__(self, "leads", leads)

    @classmethod
    def from_mapping(cls, h_s: np.ndarray, baths: dict[str, AnyBath]) -> "ScatterSetup":
        """Build a setup from ``{label: bath}`` preserving insertion order."""
        return cls(h_s=h_s, leads=tuple(Lead(label, bath) for label, bath in baths.items()))

    @property
    def dim(self) -> int:
        return self.h_s.shape[0]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lead.label for lead in self.leads)

    @property
    def all_pseudomode(self) -> bool:
        return all(lead.pseudomode for lead in self.leads)

    @property
    def all_true(self) -> bool:
        return not any(lead.pseudomode for lead in self.leads)

    def require_true(self) -> None:
        if not self.all_true:
            raise ValidationError("This transmission needs spectral-density leads only")

    def require_pseudomode(self) -> None:
        if not self.all_pseudomode:
            raise ValidationError("This transmission needs pseudomode leads only")

    def channels(self) -> tuple[tuple[str, int], ...]:
        """Return the residual channels ``(label, k)`` in extended-matrix order."""
        self.require_pseudomode()
        return tuple((lead.label, k) for lead in self.leads for k in range(lead.bath.n))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise ValidationError(f"Unknown lead '{label}'") from exc


def _warn_negative(values: np.ndarray, kind: str) -> None:
    worst = float(values.min()) if values.size else 0.0
    if worst < -NEGATIVE_TOLERANCE:
        logger.warning(
            "Negative %s transmission %s exceeds roundoff", kind, worst, extra={"min": worst}
        )


@dataclass(frozen=True, eq=False)
class TransmissionTable:
    """``T_αβ(ω)`` between leads, stored as ``(m, n_leads, n_leads)``."""

    omega: np.ndarray
    labels: tuple[str, ...]
    values: np.ndarray
    kind: str = "true"

    def __post_init__(self) -> None:
        omega = np.asarray(self.omega, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if values.shape != (omega.size, len(self.labels), len(self.labels)):
            raise ValidationError(f"Transmission values have shape {values.shape}")
        _warn_negative(values, self.kind)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", tuple(self.labels))

    def entry(self, alpha: str, beta: str) -> np.ndarray:
        return self.values[:, self.labels.index(alpha), self.labels.index(beta)]

    @property
    def columns(self) -> tuple[str, ...]:
        pairs = [f"T_{a}_{b}" for a in self.labels for b in self.labels]
        return ("omega", *pairs)

    def rows(self) -> Iterator[tuple[float, ...]]:
        flat = self.values.reshape(self.omega.size, -1)
        for omega, row in zip(self.omega, flat):
            yield (float(omega), *map(float, row))


@dataclass(frozen=True, eq=False)
class ResidualTable:
    """``T^res_{αk,βq}(ω)`` between residual channels, stored as ``(m, n_c, n_c)``."""

    omega: np.ndarray
    channels: tuple[tuple[str, int], ...]
    values: np.ndarray
    labels: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        omega = np.asarray(self.omega, dtype=float)
        values = np.asarray(self.values, dtype=float)
        count = len(self.channels)
        if values.shape != (omega.size, count, count):
            raise ValidationError(f"Residual values have shape {values.shape}")
        labels = tuple(self.labels) or tuple(dict.fromkeys(label for label, _ in self.channels))
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "channels", tuple(self.channels))
        object.__setattr__(self, "labels", labels)

    def aggregate(self) -> TransmissionTable:
        """Sum channels into lead-to-lead transmissions."""
        owner = np.array([self.labels.index(label) for label, _ in self.channels])
        membership = np.zeros((len(self.channels), len(self.labels)))
        membership[np.arange(owner.size), owner] = 1.0
        totals = np.einsum("ca,mcd,db->mab", membership, self.values, membership)
        return TransmissionTable(self.omega, self.labels, totals, kind="aggregated")

    @property
    def columns(self) -> tuple[str, ...]:
        return ("omega", "alpha", "k", "beta", "q", "T")

    def rows(self) -> Iterator[tuple]:
        for m, omega in enumerate(self.omega):
            for c, (alpha, k) in enumerate(self.channels):
                for d, (beta, q) in enumerate(self.channels):
                    yield float(omega), alpha, k, beta, q, float(self.values[m, c, d])


def transmission_gap(first: TransmissionTable, second: TransmissionTable) -> float:
    """Return ``max |ΔT|`` over the shared grid and leads."""
    if first.labels != second.labels:
        raise ValidationError("Tables describe different leads")
    if first.omega.shape != second.omega.shape or not np.allclose(first.omega, second.omega):
        raise ValidationError("Tables use different frequency grids")
    return float(np.max(np.abs(first.values - second.values)))


__all__ = [
    "TrueBath",
    "AnyBath",
    "Lead",
    "ScatterSetup",
    "TransmissionTable",
    "ResidualTable",
    "transmission_gap",
]


# The End
