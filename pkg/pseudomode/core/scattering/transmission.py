# -*- coding: utf-8 -*-
"""
transmission

Landauer-Büttiker transmissions through a non-interacting system.

Three evaluations share one retarded convention:

* ``true_transmission`` uses the physical spectral densities and level
  shifts of every lead;
* ``extended_transmission`` inverts ``ω - Q`` for the system together with
  all pseudomodes and resolves transmission per residual channel;
* ``effective_transmission`` folds the pseudomodes back into an ``n_S × n_S``
  Green's function.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, TypeVar

import numpy as np
from scipy.linalg import block_diag

from ..bath.parameters import PseudomodeBath
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import SingularResolventError, ValidationError
from .level_shift import self_energy, spectral_density_at
from .setup import ResidualTable, ScatterSetup, TransmissionTable


logger = logging.getLogger(__name__)

T = TypeVar("T")

_SINGULAR_COND = 1e14


def _grid(omegas: Iterable[float]) -> np.ndarray:
    grid = np.asarray(list(omegas), dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValidationError("Frequency grid must be a non-empty 1-D sequence")
    return grid


def _inverse(matrix: np.ndarray, omega: float) -> np.ndarray:
    condition = np.linalg.cond(matrix)
    if not np.isfinite(condition) or condition > _SINGULAR_COND:
        raise SingularResolventError(f"Resolvent is singular at ω={omega!r}", omega=omega)
    return np.linalg.inv(matrix)


def _with_shift(evaluate: Callable[[float], T], omega: float, config: PseudomodeSettings) -> T:
    """Evaluate at ``ω``, retrying once at ``ω + shift`` when a resolvent is singular."""
    try:
        return evaluate(omega)
    except SingularResolventError:
        shifted = omega + config.singular_shift
        logger.warning(
            "Singular resolvent at ω=%s, retrying at %s",
            omega,
            shifted,
            extra={"shift": config.singular_shift},
        )
    try:
        return evaluate(shifted)
    except SingularResolventError as exc:
        raise SingularResolventError(
            f"Resolvent stays singular at ω={omega!r} after shifting", omega=omega
        ) from exc


def _sweep(evaluate: Callable[[float], T], grid: np.ndarray, config: PseudomodeSettings) -> list[T]:
    def task(omega: float) -> T:
        return _with_shift(evaluate, float(omega), config)

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as executor:
            return list(executor.map(task, grid))
    return [task(omega) for omega in grid]


def _pair_transmissions(
    incoming: list[np.ndarray], green: np.ndarray, outgoing: list[np.ndarray] | None = None
) -> np.ndarray:
    """Return ``Re Tr(J_α G J_β G†)`` for every ordered pair of leads."""
    outgoing = incoming if outgoing is None else outgoing
    adjoint = green.conj().T
    left = [coupling @ green for coupling in incoming]
    right = [coupling @ adjoint for coupling in outgoing]
    count = len(incoming)
    table = np.empty((count, count))
    for a in range(count):
        for b in range(count):
            table[a, b] = np.trace(left[a] @ right[b]).real
    return table


def true_transmission(
    setup: ScatterSetup,
    omegas: Iterable[float],
    *,
    settings: PseudomodeSettings | None = None,
) -> TransmissionTable:
    """Return ``T_αβ = Tr{J_α G J_β G†}`` with ``G = (ω - H_S - Σ Σ_α)⁻¹``."""
    config = resolve_settings(settings)
    setup.require_true()
    grid = _grid(omegas)
    identity = np.eye(setup.dim)

    def evaluate(omega: float) -> np.ndarray:
        sigma = sum(self_energy(lead.bath, omega, settings=config) for lead in setup.leads)
        green = _inverse(omega * identity - setup.h_s - sigma, omega)
        couplings = [spectral_density_at(lead.bath, omega) for lead in setup.leads]
        return _pair_transmissions(couplings, green)

    values = np.stack(_sweep(evaluate, grid, config))
    logger.debug("True transmission computed", extra={"points": grid.size, "leads": setup.labels})
    return TransmissionTable(grid, setup.labels, values, kind="true")


def _baths(setup: ScatterSetup) -> list[PseudomodeBath]:
    setup.require_pseudomode()
    return [lead.bath for lead in setup.leads]


def extended_matrix(setup: ScatterSetup) -> np.ndarray:
    """Return ``Q`` ordered as system sites followed by each lead's pseudomodes."""
    baths = _baths(setup)
    n_s = setup.dim
    modes = block_diag(*[bath.lam - 0.5j * np.diag(bath.rates) for bath in baths])
    coupling = np.vstack([bath.zeta for bath in baths])
    size = n_s + modes.shape[0]
    q = np.zeros((size, size), dtype=complex)
    q[:n_s, :n_s] = setup.h_s
    q[n_s:, n_s:] = modes
    q[n_s:, :n_s] = coupling
    q[:n_s, n_s:] = coupling.conj().T
    return q


def _mode_resolvent(bath: PseudomodeBath, omega: float) -> np.ndarray:
    """Return ``F = (ω - iW)⁻¹ = (ω - Λ + iΓ/2)⁻¹``."""
    return _inverse(omega * np.eye(bath.n) - 1j * bath.w, omega)


@dataclass(frozen=True, eq=False)
class ResolvedCouplings:
    """Per-channel couplings ``𝒥±_k`` of one pseudomode lead at one frequency.

    ``plus[k] = ζ† F† Ĵ_k F ζ`` and ``minus[k] = ζ† F Ĵ_k F† ζ`` with
    ``Ĵ_k = Γ_k e_k e_kᵀ``; each sums to ``J_eff(ω)``.
    """

    omega: float
    plus: np.ndarray
    minus: np.ndarray

    @property
    def total_plus(self) -> np.ndarray:
        return self.plus.sum(axis=0)

    @property
    def total_minus(self) -> np.ndarray:
        return self.minus.sum(axis=0)


def resolved_couplings(bath: PseudomodeBath, omega: float) -> ResolvedCouplings:
    """Return the residual-channel couplings ``𝒥±_k(ω)`` of ``bath``."""
    resolvent = _mode_resolvent(bath, omega)
    forward = resolvent @ bath.zeta
    backward = resolvent.conj().T @ bath.zeta
    plus = bath.rates[:, None, None] * np.einsum("ki,kj->kij", forward.conj(), forward)
    minus = bath.rates[:, None, None] * np.einsum("ki,kj->kij", backward.conj(), backward)
    return ResolvedCouplings(omega=omega, plus=plus, minus=minus)


@dataclass(frozen=True, eq=False)
class GreenBlocks:
    """Blocks of ``(ω - Q)⁻¹`` built from the system Green's function ``𝒢_S``.

    ``mode_system[α] = F_α ζ_α 𝒢_S``, ``system_mode[α] = 𝒢_S ζ_α† F_α`` and
    ``mode_mode[α][β] = δ_αβ F_α + F_α ζ_α 𝒢_S ζ_β† F_β``.
    """

    omega: float
    system: np.ndarray
    resolvents: tuple[np.ndarray, ...]
    mode_system: tuple[np.ndarray, ...]
    system_mode: tuple[np.ndarray, ...]
    mode_mode: tuple[tuple[np.ndarray, ...], ...]

    def assemble(self) -> np.ndarray:
        """Return the full extended Green's function in the order of :func:`extended_matrix`."""
        rows = [np.hstack([self.system, *self.system_mode])]
        for alpha, block in enumerate(self.mode_system):
            rows.append(np.hstack([block, *self.mode_mode[alpha]]))
        return np.vstack(rows)


def extended_green_blocks(setup: ScatterSetup, omega: float) -> GreenBlocks:
    """Return the extended Green's function blocks at ``ω`` without inverting ``ω - Q``."""
    baths = _baths(setup)
    resolvents = tuple(_mode_resolvent(bath, omega) for bath in baths)
    sigma = sum(bath.zeta.conj().T @ f @ bath.zeta for bath, f in zip(baths, resolvents))
    system = _inverse(omega * np.eye(setup.dim) - setup.h_s - sigma, omega)
    mode_system = tuple(f @ bath.zeta @ system for bath, f in zip(baths, resolvents))
    system_mode = tuple(system @ bath.zeta.conj().T @ f for bath, f in zip(baths, resolvents))
    mode_mode = tuple(
        tuple(
            (resolvents[a] if a == b else 0.0)
            + mode_system[a] @ baths[b].zeta.conj().T @ resolvents[b]
            for b in range(len(baths))
        )
        for a in range(len(baths))
    )
    return GreenBlocks(
        omega=omega,
        system=system,
        resolvents=resolvents,
        mode_system=mode_system,
        system_mode=system_mode,
        mode_mode=mode_mode,
    )


def extended_transmission(
    setup: ScatterSetup,
    omegas: Iterable[float],
    *,
    method: str = "direct",
    settings: PseudomodeSettings | None = None,
) -> ResidualTable:
    """Return ``T^res_{αk,βq} = Γ_αk Γ_βq |𝒢_{αk,βq}|²`` between residual channels.

    ``method="direct"`` inverts ``ω - Q``; ``method="blocks"`` assembles the
    same matrix from :func:`extended_green_blocks`.
    """
    if method not in ("direct", "blocks"):
        raise ValidationError(f"Unknown extended-transmission method {method!r}")
    config = resolve_settings(settings)
    baths = _baths(setup)
    grid = _grid(omegas)
    q = extended_matrix(setup)
    n_s = setup.dim
    rates = np.concatenate([bath.rates for bath in baths])
    weights = np.outer(rates, rates)
    identity = np.eye(q.shape[0])

    def evaluate(omega: float) -> np.ndarray:
        if method == "direct":
            green = _inverse(omega * identity - q, omega)
        else:
            green = extended_green_blocks(setup, omega).assemble()
        modes = green[n_s:, n_s:]
        return weights * np.abs(modes) ** 2

    values = np.stack(_sweep(evaluate, grid, config))
    logger.debug(
        "Residual-resolved transmission computed",
        extra={"points": grid.size, "channels": rates.size, "method": method},
    )
    return ResidualTable(grid, setup.channels(), values, labels=setup.labels)


def effective_transmission(
    setup: ScatterSetup,
    omegas: Iterable[float],
    *,
    settings: PseudomodeSettings | None = None,
) -> TransmissionTable:
    """Return ``T_αβ = Tr{𝒥⁺_α 𝒢_S 𝒥⁻_β 𝒢_S†}`` with ``𝒥±_α = Σ_k 𝒥±_αk``."""
    config = resolve_settings(settings)
    baths = _baths(setup)
    grid = _grid(omegas)

    def evaluate(omega: float) -> np.ndarray:
        blocks = extended_green_blocks(setup, omega)
        resolved = [resolved_couplings(bath, omega) for bath in baths]
        return _pair_transmissions(
            [item.total_plus for item in resolved],
            blocks.system,
            [item.total_minus for item in resolved],
        )

    values = np.stack(_sweep(evaluate, grid, config))
    logger.debug("Effective transmission computed", extra={"points": grid.size, "leads": setup.labels})
    return TransmissionTable(grid, setup.labels, values, kind="effective")


__all__ = [
    "GreenBlocks",
    "ResolvedCouplings",
    "extended_matrix",
    "extended_green_blocks",
    "resolved_couplings",
    "true_transmission",
    "extended_transmission",
    "effective_transmission",
]


# The End
