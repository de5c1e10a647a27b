# -*- coding: utf-8 -*-
"""
parameters

Pseudomode parameter set of one bath.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import ValidationError


logger = logging.getLogger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class PseudomodeBath:
    """Pseudomode Hamiltonian ``Λ``, residual rates ``Γ`` and couplings ``ζ``.

    ``zeta`` has one row per pseudomode and one column per system site, so
    column ``i`` is the coupling vector ``ζ_i``.  ``Γ`` is stored as the
    vector of its diagonal.
    """

    lam: np.ndarray
    rates: np.ndarray
    zeta: np.ndarray

    def __post_init__(self) -> None:
        """Validate shapes and Hermiticity, then freeze the arrays."""
        lam = np.array(self.lam, dtype=complex, ndmin=2)
        rates = np.array(self.rates, dtype=float, ndmin=1)
        zeta = np.array(self.zeta, dtype=complex)
        if zeta.ndim == 1:
            zeta = zeta[:, None]
        n = lam.shape[0]
        if lam.shape != (n, n):
            raise ValidationError(f"Λ must be square, got shape {lam.shape}")
        if rates.shape != (n,):
            raise ValidationError(f"Γ must hold {n} diagonal rates, got shape {rates.shape}")
        if zeta.ndim != 2 or zeta.shape[0] != n or zeta.shape[1] == 0:
            raise ValidationError(f"ζ must have shape ({n}, n_S), got {zeta.shape}")
        tolerance = resolve_settings(None).hermiticity_tol
        scale = np.linalg.norm(lam)
        defect = np.linalg.norm(lam - lam.conj().T)
        if defect > tolerance * scale:
            raise ValidationError(
                f"Λ is not Hermitian: relative defect {defect / max(scale, 1e-300):.3e}"
            )
        lam = 0.5 * (lam + lam.conj().T)
        object.__setattr__(self, "lam", _frozen(lam))
        object.__setattr__(self, "rates", _frozen(rates))
        object.__setattr__(self, "zeta", _frozen(zeta))

    @property
    def n(self) -> int:
        """Return the number of pseudomodes."""
        return self.lam.shape[0]

    @property
    def dim(self) -> int:
        """Return ``n_S``, the number of system sites the bath couples to."""
        return self.zeta.shape[1]

    @property
    def gamma(self) -> np.ndarray:
        """Return ``Γ`` as a diagonal matrix."""
        return np.diag(self.rates)

    @property
    def physical(self) -> bool:
        """Return ``True`` when every residual rate is non-negative."""
        return bool(np.all(self.rates >= 0.0))

    @property
    def w(self) -> np.ndarray:
        """Return ``W = -iΛ - Γ/2``."""
        return -1j * self.lam - 0.5 * np.diag(self.rates).astype(complex)

    @classmethod
    def from_w(
        cls,
        w: np.ndarray,
        zeta: np.ndarray,
        *,
        settings: PseudomodeSettings | None = None,
    ) -> "PseudomodeBath":
        """Recover ``(Λ, Γ, ζ)`` from a generator whose ``-(W + W†)`` is diagonal."""
        config = resolve_settings(settings)
        generator = np.asarray(w, dtype=complex)
        gamma = -(generator + generator.conj().T)
        off = gamma - np.diag(np.diag(gamma))
        scale = max(np.linalg.norm(generator), 1e-300)
        if np.linalg.norm(off) > config.hermiticity_tol * scale * 10.0:
            raise ValidationError(
                "-(W + W†) is not diagonal; rotate the generator before building a bath"
            )
        lam = (generator.conj().T - generator) / 2j
        logger.debug(
            "Bath recovered from generator",
            extra={"modes": generator.shape[0], "offdiagonal_gamma": float(np.linalg.norm(off))},
        )
        return cls(lam=lam, rates=np.real(np.diag(gamma)), zeta=zeta)

    def rotated(
        self,
        unitary: np.ndarray,
        *,
        settings: PseudomodeSettings | None = None,
    ) -> "PseudomodeBath":
        """Return the bath with ``W → U W U†`` and ``ζ → U ζ``.

        The kernel and ``J_eff`` are unchanged.  ``U`` must keep ``Γ``
        diagonal, i.e. only mix modes with equal residual rates.
        """
        config = resolve_settings(settings)
        u = np.asarray(unitary, dtype=complex)
        if u.shape != (self.n, self.n):
            raise ValidationError(f"U must have shape ({self.n}, {self.n}), got {u.shape}")
        if np.linalg.norm(u.conj().T @ u - np.eye(self.n)) > config.hermiticity_tol * 10.0 * self.n:
            raise ValidationError("U is not unitary")
        return PseudomodeBath.from_w(u @ self.w @ u.conj().T, u @ self.zeta, settings=config)

    @classmethod
    def diagonal(
        cls,
        energies: np.ndarray,
        rates: np.ndarray,
        zeta: np.ndarray,
    ) -> "PseudomodeBath":
        """Build a bath with diagonal ``Λ``."""
        return cls(lam=np.diag(np.asarray(energies, dtype=float)), rates=rates, zeta=zeta)


__all__ = ["PseudomodeBath"]


# The End
