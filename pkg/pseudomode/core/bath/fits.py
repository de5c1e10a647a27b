# -*- coding: utf-8 -*-
"""
fits

Sum-of-exponentials representations of memory kernels and uniform kernel samples.

A term ``κ tᵖ e^{(-iε - γ/2)t}`` contributes
``p! [κ / zᵖ⁺¹ + κ† / z̄ᵖ⁺¹]`` with ``z = γ/2 - i(ω - ε)`` to the spectral
density, so the kernel for ``t < 0`` is the adjoint ``χ(-t) = χ(t)†``.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from ..configuration.conf import PseudomodeSettings
from ..exceptions import ValidationError


@dataclass(frozen=True, eq=False)
class ExpTerm:
    """Single term ``κ tᵖ e^{(-iε - γ/2)t}`` of a kernel expansion."""

    amplitude: np.ndarray
    energy: float
    rate: float
    power: int = 0

    def __post_init__(self) -> None:
        amplitude = np.array(self.amplitude, dtype=complex, ndmin=2)
        if amplitude.shape[0] != amplitude.shape[1]:
            raise ValidationError(f"Term amplitude must be square, got {amplitude.shape}")
        if int(self.power) != self.power or self.power < 0:
            raise ValidationError(f"Term power must be a non-negative integer, got {self.power!r}")
        amplitude.setflags(write=False)
        object.__setattr__(self, "amplitude", amplitude)
        object.__setattr__(self, "energy", float(self.energy))
        object.__setattr__(self, "rate", float(self.rate))
        object.__setattr__(self, "power", int(self.power))

    @property
    def exponent(self) -> complex:
        """Return ``-iε - γ/2``."""
        return complex(-0.5 * self.rate, -self.energy)

    @classmethod
    def from_exponent(cls, amplitude: np.ndarray, exponent: complex, power: int = 0) -> "ExpTerm":
        """Build a term from the complex exponent ``s = -iε - γ/2``."""
        return cls(amplitude=amplitude, energy=-exponent.imag, rate=-2.0 * exponent.real, power=power)

    def kernel(self, times: np.ndarray) -> np.ndarray:
        """Return the term evaluated for non-negative ``times`` as ``(m, n, n)``."""
        grid = np.asarray(times, dtype=float)
        weight = grid ** self.power * np.exp(self.exponent * grid)
        return weight[:, None, None] * self.amplitude[None, :, :]

    def _z(self, omega: np.ndarray) -> np.ndarray:
        return 0.5 * self.rate - 1j * (np.asarray(omega, dtype=float) - self.energy)

    def spectral_contribution(self, omegas: np.ndarray) -> np.ndarray:
        """Return the Hermitian contribution to ``J`` on ``omegas`` as ``(m, n, n)``."""
        z = self._z(omegas)[:, None, None]
        order = self.power + 1
        factor = math.factorial(self.power)
        kappa = self.amplitude[None, :, :]
        return factor * (kappa / z**order + kappa.conj().transpose(0, 2, 1) / np.conj(z) ** order)

    def retarded_transform(self, omegas: np.ndarray) -> np.ndarray:
        """Return ``-i ∫₀^∞ dt term(t) e^{iωt} = -i p! κ / zᵖ⁺¹`` on ``omegas``."""
        z = self._z(omegas)[:, None, None]
        factor = math.factorial(self.power)
        return -1j * factor * self.amplitude[None, :, :] / z ** (self.power + 1)

    def lorentzian_part(self, omegas: np.ndarray) -> np.ndarray:
        """Return the Lorentzian share of a power-0 term."""
        if self.power:
            return np.zeros((np.size(omegas),) + self.amplitude.shape)
        x = np.asarray(omegas, dtype=float) - self.energy
        profile = self.rate / (x * x + 0.25 * self.rate**2)
        hermitian = 0.5 * (self.amplitude + self.amplitude.conj().T)
        return profile[:, None, None] * hermitian[None, :, :]

    def anti_lorentzian_part(self, omegas: np.ndarray) -> np.ndarray:
        """Return the Anti-Lorentzian share of a power-0 term."""
        if self.power:
            return np.zeros((np.size(omegas),) + self.amplitude.shape)
        x = np.asarray(omegas, dtype=float) - self.energy
        profile = x / (x * x + 0.25 * self.rate**2)
        skew = 1j * (self.amplitude - self.amplitude.conj().T)
        return profile[:, None, None] * skew[None, :, :]


@dataclass(frozen=True, eq=False)
class ExpFit:
    """Ordered list of exponential terms sharing one ``n_S``."""

    terms: tuple[ExpTerm, ...]
    residual: float | None = None
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise ValidationError("An exponential fit needs at least one term")
        dims = {term.amplitude.shape[0] for term in terms}
        if len(dims) != 1:
            raise ValidationError(f"All terms must share n_S, got {sorted(dims)}")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "warnings", tuple(self.warnings))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def dim(self) -> int:
        return self.terms[0].amplitude.shape[0]

    @property
    def energies(self) -> np.ndarray:
        return np.array([term.energy for term in self.terms])

    @property
    def rates(self) -> np.ndarray:
        return np.array([term.rate for term in self.terms])

    @property
    def powers(self) -> np.ndarray:
        return np.array([term.power for term in self.terms], dtype=int)

    @property
    def exponents(self) -> np.ndarray:
        return np.array([term.exponent for term in self.terms])

    @property
    def decaying(self) -> bool:
        """Return ``True`` when every term decays."""
        return bool(np.all(self.rates > 0.0))

    def scalar_amplitudes(self) -> np.ndarray:
        """Return the amplitudes of a single-site fit as a vector."""
        if self.dim != 1:
            raise ValidationError("Scalar amplitudes requested for a multi-site fit")
        return np.array([term.amplitude[0, 0] for term in self.terms])

    def amplitude_sums(self) -> np.ndarray:
        """Return ``Σ_k κ_k``, which equals ``χ(0)``."""
        return np.sum([term.amplitude for term in self.terms], axis=0)

    def kernel_series(self, times: np.ndarray) -> np.ndarray:
        """Return ``χ`` on ``times`` (either sign) as ``(m, n, n)``."""
        grid = np.asarray(times, dtype=float)
        magnitude = np.abs(grid)
        values = np.zeros((grid.size, self.dim, self.dim), dtype=complex)
        for term in self.terms:
            values += term.kernel(magnitude)
        negative = grid < 0
        values[negative] = np.conj(np.swapaxes(values[negative], 1, 2))
        return values

    def kernel(self, t: float) -> np.ndarray:
        return self.kernel_series(np.asarray([t]))[0]

    def spectral_density_grid(self, omegas: np.ndarray) -> np.ndarray:
        grid = np.asarray(omegas, dtype=float)
        total = np.zeros((grid.size, self.dim, self.dim), dtype=complex)
        for term in self.terms:
            total += term.spectral_contribution(grid)
        return total

    def spectral_density(self, omega: float) -> np.ndarray:
        return self.spectral_density_grid(np.asarray([omega]))[0]

    def self_energy_grid(self, omegas: np.ndarray) -> np.ndarray:
        """Return the retarded self-energy ``-i ∫₀^∞ dt χ(t) e^{iωt}`` on ``omegas``.

        Its anti-Hermitian part is ``-iJ/2`` and its Hermitian part the level shift.
        """
        grid = np.asarray(omegas, dtype=float)
        total = np.zeros((grid.size, self.dim, self.dim), dtype=complex)
        for term in self.terms:
            total += term.retarded_transform(grid)
        return total

    @classmethod
    def from_arrays(
        cls,
        amplitudes: Sequence[complex] | np.ndarray,
        energies: Sequence[float] | np.ndarray,
        rates: Sequence[float] | np.ndarray,
        powers: Sequence[int] | None = None,
        **kwargs,
    ) -> "ExpFit":
        """Build a fit from per-term arrays; scalar amplitudes give ``n_S = 1``."""
        amplitudes = np.asarray(amplitudes, dtype=complex)
        count = amplitudes.shape[0]
        energies = np.broadcast_to(np.asarray(energies, dtype=float), (count,))
        rates = np.broadcast_to(np.asarray(rates, dtype=float), (count,))
        powers = [0] * count if powers is None else list(powers)
        if amplitudes.ndim == 1:
            amplitudes = amplitudes[:, None, None]
        terms = tuple(
            ExpTerm(amplitudes[k], energies[k], rates[k], powers[k]) for k in range(count)
        )
        return cls(terms=terms, **kwargs)


@dataclass(frozen=True, eq=False)
class KernelSample:
    """Kernel values on the uniform grid ``t_j = j Δt`` with ``j = 0..2N``."""

    step: float
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=complex)
        if values.ndim == 1:
            values = values[:, None, None]
        if values.ndim != 3 or values.shape[1] != values.shape[2]:
            raise ValidationError(f"Kernel samples must have shape (2N+1, n, n), got {values.shape}")
        if values.shape[0] < 3 or values.shape[0] % 2 == 0:
            raise ValidationError(f"Prony sampling needs an odd count 2N+1 ≥ 3, got {values.shape[0]}")
        if not self.step > 0.0:
            raise ValidationError(f"Sampling step must be positive, got {self.step!r}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "step", float(self.step))

    @property
    def half_count(self) -> int:
        """Return ``N``."""
        return (self.values.shape[0] - 1) // 2

    @property
    def window(self) -> float:
        """Return ``t_c = 2N Δt``."""
        return 2 * self.half_count * self.step

    @property
    def times(self) -> np.ndarray:
        return self.step * np.arange(self.values.shape[0])

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @classmethod
    def from_times(cls, times: Iterable[float], values: np.ndarray) -> "KernelSample":
        """Build samples from explicit times, which must start at zero and be uniform."""
        grid = np.asarray(list(times), dtype=float)
        if grid.size < 2 or grid[0] != 0.0:
            raise ValidationError("Sample times must start at t = 0")
        spacing = np.diff(grid)
        if not np.allclose(spacing, spacing[0], rtol=1e-12, atol=0.0):
            raise ValidationError("Sample times must be uniformly spaced")
        return cls(step=float(spacing[0]), values=values)

    @classmethod
    def from_function(
        cls, function: Callable[[float], np.ndarray | complex], step: float, half_count: int
    ) -> "KernelSample":
        times = step * np.arange(2 * half_count + 1)
        values = [np.array(function(t), dtype=complex, ndmin=2) for t in times]
        return cls(step=step, values=np.stack(values))

    @classmethod
    def from_fit(cls, fit: ExpFit, step: float, half_count: int) -> "KernelSample":
        times = step * np.arange(2 * half_count + 1)
        return cls(step=step, values=fit.kernel_series(times))

    @classmethod
    def from_model(
        cls,
        model,
        step: float,
        half_count: int,
        *,
        settings: PseudomodeSettings | None = None,
    ) -> "KernelSample":
        """Sample ``memory_kernel(model, t)`` on the Prony grid."""
        from .kernels import memory_kernel

        return cls.from_function(
            lambda t: memory_kernel(model, t, settings=settings), step, half_count
        )


__all__ = ["ExpTerm", "ExpFit", "KernelSample"]


# The End
