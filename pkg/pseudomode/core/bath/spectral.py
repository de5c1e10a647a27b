# -*- coding: utf-8 -*-
"""
spectral

Spectral density families of physical fermionic baths.

Every family describes a real symmetric matrix ``J(ω)`` of dimension
``n_S × n_S``.  The analytic families are separable, ``J(ω) = shape(ω) · C``
with a real symmetric coupling matrix ``C``; tabulated data carries a full
matrix per grid point.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Annotated, Any, Callable, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field as PField, PrivateAttr, field_validator, model_validator
from scipy.interpolate import CubicSpline
from scipy.special import j1

from ..exceptions import ValidationError


@dataclass(frozen=True)
class QuadratureSegment:
    """Piece of the frequency axis prepared for adaptive quadrature.

    ``∫ J(ω) g(ω) dω`` over the segment equals ``∫ density(θ) g(omega(θ)) dθ``
    between ``lo`` and ``hi``.  Unmapped segments use ``θ = ω`` and may have
    infinite limits; mapped segments are always finite.
    """

    lo: float
    hi: float
    density: Callable[[float], float]
    omega: Callable[[float], float] | None = None
    theta: Callable[[float], float] | None = None

    @property
    def mapped(self) -> bool:
        """Return ``True`` when the segment integrates in a substituted variable."""
        return self.omega is not None

    def at(self, theta: float) -> float:
        """Return the frequency reached at integration variable ``theta``."""
        return self.omega(theta) if self.omega is not None else theta

    def split(self, omega: float) -> list["QuadratureSegment"]:
        """Split the segment at frequency ``omega`` when it lies strictly inside."""
        cut = omega if self.theta is None else self.theta(omega)
        if not np.isfinite(cut) or not (self.lo < cut < self.hi):
            return [self]
        return [
            QuadratureSegment(self.lo, cut, self.density, self.omega, self.theta),
            QuadratureSegment(cut, self.hi, self.density, self.omega, self.theta),
        ]


class SpectralModel(BaseModel):
    """Base class for matrix-valued spectral densities of one bath."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    coupling: list[list[float]] = PField(default_factory=lambda: [[1.0]])

    @field_validator("coupling")
    @classmethod
    def _check_coupling(cls, value: list[list[float]]) -> list[list[float]]:
        matrix = np.asarray(value, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise ValueError("coupling must be a non-empty square matrix")
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(matrix).max())):
            raise ValueError("coupling must be symmetric")
        return value

    @property
    def dim(self) -> int:
        """Return ``n_S``, the number of system sites coupled to the bath."""
        return len(self.coupling)

    @property
    def coupling_matrix(self) -> np.ndarray:
        """Return the coupling matrix as a float array."""
        return np.asarray(self.coupling, dtype=float)

    @property
    def physical(self) -> bool:
        """Return ``True`` when every diagonal entry of ``J`` is non-negative."""
        return bool(np.all(np.diag(self.coupling_matrix) >= 0.0))

    # --- evaluation -----------------------------------------------------

    def shape(self, omega: np.ndarray) -> np.ndarray:
        """Return the scalar profile of a separable family on ``omega``."""
        raise NotImplementedError

    def evaluate(self, omega: float) -> np.ndarray:
        """Return ``J(ω)`` as a real symmetric ``n_S × n_S`` matrix."""
        return self.evaluate_grid(np.asarray([omega], dtype=float))[0]

    def evaluate_grid(self, omegas: np.ndarray) -> np.ndarray:
        """Return ``J`` stacked along the first axis for every frequency."""
        grid = np.asarray(omegas, dtype=float)
        profile = self.shape(grid)
        return profile[:, None, None] * self.coupling_matrix[None, :, :]

    def element(self, i: int, j: int) -> Callable[[float], float]:
        """Return a scalar callable evaluating ``J_ij``."""
        factor = self.coupling_matrix[i, j]

        def value(omega: float) -> float:
            return float(factor * self.shape(np.asarray([omega]))[0])

        return value

    # --- integration support -------------------------------------------

    def support(self) -> tuple[float, float]:
        """Return a finite window containing the spectral weight."""
        raise NotImplementedError

    def integration_limits(self) -> tuple[float, float]:
        """Return the limits outside which ``J`` vanishes identically."""
        return self.support()

    def bandwidth(self) -> float:
        """Return the frequency scale used to size sampling windows."""
        lo, hi = self.support()
        return 0.5 * (hi - lo)

    def shape_moment(self) -> float:
        """Return ``∫ dω/2π shape(ω)``."""
        raise NotImplementedError

    def zeroth_moment(self) -> np.ndarray:
        """Return ``∫ dω/2π J(ω)``, which equals the memory kernel at ``t = 0``."""
        return self.shape_moment() * self.coupling_matrix

    def shape_segments(self) -> list[QuadratureSegment]:
        """Return segments covering the profile for quadrature."""
        raise NotImplementedError

    def element_segments(self, i: int, j: int) -> list[QuadratureSegment]:
        """Return segments integrating ``J_ij`` for quadrature."""
        factor = self.coupling_matrix[i, j]
        if factor == 0.0:
            return []
        segments = []
        for segment in self.shape_segments():
            density = segment.density
            segments.append(
                QuadratureSegment(
                    segment.lo,
                    segment.hi,
                    lambda theta, density=density: factor * density(theta),
                    segment.omega,
                    segment.theta,
                )
            )
        return segments

    # --- closed forms ---------------------------------------------------

    def shape_kernel(self, t: float) -> complex | None:
        """Return the profile's memory kernel when a closed form exists."""
        return None

    def kernel_closed_form(self, t: float) -> np.ndarray | None:
        """Return ``χ(t)`` in closed form or ``None``."""
        value = self.shape_kernel(t)
        if value is None:
            return None
        return value * self.coupling_matrix.astype(complex)

    def shape_level_shift(self, omega: float) -> float | None:
        """Return the profile's principal-value transform when known in closed form."""
        return None

    def level_shift_closed_form(self, omega: float) -> np.ndarray | None:
        """Return ``Υ(ω)`` in closed form or ``None``."""
        value = self.shape_level_shift(omega)
        if value is None:
            return None
        return value * self.coupling_matrix


class SemiElliptical(SpectralModel):
    """Semicircular band ``height · sqrt(1 - (ω/D)^2)`` on ``[-D, D]``."""

    kind: Literal["semi-elliptical"] = "semi-elliptical"
    halfwidth: float = PField(1.0, gt=0.0)
    height: float = PField(1.0, ge=0.0)

    def shape(self, omega: np.ndarray) -> np.ndarray:
        x = np.asarray(omega, dtype=float) / self.halfwidth
        inside = np.clip(1.0 - x * x, 0.0, None)
        return self.height * np.sqrt(inside)

    def support(self) -> tuple[float, float]:
        return (-self.halfwidth, self.halfwidth)

    def bandwidth(self) -> float:
        return self.halfwidth

    def shape_moment(self) -> float:
        return self.height * self.halfwidth / 4.0

    def shape_segments(self) -> list[QuadratureSegment]:
        width = self.halfwidth
        height = self.height

        def theta_of(omega: float) -> float:
            if abs(omega) >= width:
                return math.nan
            return math.asin(omega / width)

        return [
            QuadratureSegment(
                -0.5 * math.pi,
                0.5 * math.pi,
                lambda theta: height * width * math.cos(theta) ** 2,
                lambda theta: width * math.sin(theta),
                theta_of,
            )
        ]

    def shape_kernel(self, t: float) -> complex:
        if t == 0.0:
            return complex(self.shape_moment())
        return complex(self.height * j1(self.halfwidth * t) / (2.0 * t))

    def shape_level_shift(self, omega: float) -> float:
        z = omega / self.halfwidth
        if abs(z) <= 1.0:
            return 0.5 * self.height * z
        return 0.5 * self.height * (z - math.copysign(math.sqrt(z * z - 1.0), z))


class FlatWindow(SpectralModel):
    """Constant density ``Γ0`` on the closed window ``[ω_m, ω_M]``."""

    kind: Literal["flat-window"] = "flat-window"
    gamma0: float = PField(1.0, ge=0.0)
    omega_min: float = -1.0
    omega_max: float = 1.0

    @model_validator(mode="after")
    def _check_window(self) -> "FlatWindow":
        if not self.omega_max > self.omega_min:
            raise ValueError("omega_max must exceed omega_min")
        return self

    def shape(self, omega: np.ndarray) -> np.ndarray:
        grid = np.asarray(omega, dtype=float)
        inside = (grid >= self.omega_min) & (grid <= self.omega_max)
        return np.where(inside, self.gamma0, 0.0)

    def support(self) -> tuple[float, float]:
        return (self.omega_min, self.omega_max)

    def shape_moment(self) -> float:
        return self.gamma0 * (self.omega_max - self.omega_min) / (2.0 * math.pi)

    def shape_segments(self) -> list[QuadratureSegment]:
        gamma0 = self.gamma0
        return [QuadratureSegment(self.omega_min, self.omega_max, lambda omega: gamma0)]

    def shape_kernel(self, t: float) -> complex:
        if t == 0.0:
            return complex(self.shape_moment())
        upper = np.exp(-1j * self.omega_max * t)
        lower = np.exp(-1j * self.omega_min * t)
        return complex(1j * self.gamma0 / (2.0 * math.pi * t) * (upper - lower))

    def shape_level_shift(self, omega: float) -> float:
        if omega in (self.omega_min, self.omega_max):
            raise ValidationError(
                f"Level shift of a flat window diverges at its edge ω={omega!r}"
            )
        ratio = abs((omega - self.omega_min) / (omega - self.omega_max))
        return self.gamma0 / (2.0 * math.pi) * math.log(ratio)


class LorentzianTerm(BaseModel):
    """One Lorentzian peak ``a · γ / ((ω - ε)^2 + γ^2/4)``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    amplitude: float
    center: float
    width: float = PField(gt=0.0)


class LorentzianSum(SpectralModel):
    """Sum of Lorentzian peaks; its kernel is ``Σ a e^{-iεt - γ|t|/2}``."""

    kind: Literal["lorentzian-sum"] = "lorentzian-sum"
    terms: list[LorentzianTerm] = PField(min_length=1)

    @property
    def physical(self) -> bool:
        return super().physical and all(term.amplitude >= 0.0 for term in self.terms)

    def _arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        amplitude = np.array([term.amplitude for term in self.terms], dtype=float)
        center = np.array([term.center for term in self.terms], dtype=float)
        width = np.array([term.width for term in self.terms], dtype=float)
        return amplitude, center, width

    def shape(self, omega: np.ndarray) -> np.ndarray:
        amplitude, center, width = self._arrays()
        x = np.asarray(omega, dtype=float)[:, None] - center[None, :]
        return np.sum(amplitude * width / (x * x + 0.25 * width * width), axis=1)

    def support(self) -> tuple[float, float]:
        _, center, width = self._arrays()
        return (float(center.min() - 10.0 * width.max()), float(center.max() + 10.0 * width.max()))

    def integration_limits(self) -> tuple[float, float]:
        return (-math.inf, math.inf)

    def bandwidth(self) -> float:
        _, _, width = self._arrays()
        return float(0.5 * width.min())

    def shape_moment(self) -> float:
        amplitude, _, _ = self._arrays()
        return float(amplitude.sum())

    def shape_segments(self) -> list[QuadratureSegment]:
        lo, hi = self.support()

        def density(omega: float) -> float:
            return float(self.shape(np.asarray([omega]))[0])

        return [
            QuadratureSegment(-math.inf, lo, density),
            QuadratureSegment(lo, hi, density),
            QuadratureSegment(hi, math.inf, density),
        ]

    def shape_kernel(self, t: float) -> complex:
        amplitude, center, width = self._arrays()
        return complex(np.sum(amplitude * np.exp(-1j * center * t - 0.5 * width * abs(t))))

    def shape_level_shift(self, omega: float) -> float:
        amplitude, center, width = self._arrays()
        x = omega - center
        return float(np.sum(amplitude * x / (x * x + 0.25 * width * width)))


class Tabulated(SpectralModel):
    """Spectral density sampled on a grid and interpolated by cubic splines.

    Outside the grid the density is zero.
    """

    kind: Literal["tabulated"] = "tabulated"
    grid: list[float] = PField(min_length=4)
    values: list[list[list[float]]]

    _spline: Any = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _check_table(self) -> "Tabulated":
        grid = np.asarray(self.grid, dtype=float)
        if np.any(np.diff(grid) <= 0.0):
            raise ValueError("tabulated grid must be strictly increasing")
        table = np.asarray(self.values, dtype=float)
        if table.ndim != 3 or table.shape[0] != grid.size or table.shape[1] != table.shape[2]:
            raise ValueError("values must have shape (len(grid), n_S, n_S)")
        scale = max(1.0, float(np.abs(table).max()))
        if not np.allclose(table, np.swapaxes(table, 1, 2), rtol=0.0, atol=1e-12 * scale):
            raise ValueError("tabulated J must be symmetric at every grid point")
        return self

    def model_post_init(self, __context: Any) -> None:
        table = np.asarray(self.values, dtype=float)
        table = 0.5 * (table + np.swapaxes(table, 1, 2))
        self._spline = CubicSpline(np.asarray(self.grid, dtype=float), table, axis=0)

    @property
    def dim(self) -> int:
        return len(self.values[0])

    @property
    def coupling_matrix(self) -> np.ndarray:
        return np.ones((self.dim, self.dim))

    @property
    def physical(self) -> bool:
        table = np.asarray(self.values, dtype=float)
        return bool(np.all(np.diagonal(table, axis1=1, axis2=2) >= 0.0))

    def evaluate_grid(self, omegas: np.ndarray) -> np.ndarray:
        grid = np.asarray(omegas, dtype=float)
        result = np.asarray(self._spline(grid), dtype=float)
        outside = (grid < self.grid[0]) | (grid > self.grid[-1])
        result[outside] = 0.0
        return 0.5 * (result + np.swapaxes(result, 1, 2))

    def element(self, i: int, j: int) -> Callable[[float], float]:
        lo, hi = self.grid[0], self.grid[-1]

        def value(omega: float) -> float:
            if omega < lo or omega > hi:
                return 0.0
            return float(self._spline(omega)[i, j])

        return value

    def support(self) -> tuple[float, float]:
        return (float(self.grid[0]), float(self.grid[-1]))

    def zeroth_moment(self) -> np.ndarray:
        integral = self._spline.integrate(self.grid[0], self.grid[-1])
        return np.asarray(integral, dtype=float) / (2.0 * math.pi)

    def element_segments(self, i: int, j: int) -> list[QuadratureSegment]:
        lo, hi = self.support()
        return [QuadratureSegment(lo, hi, self.element(i, j))]


SpectralModelSpec = Annotated[
    Union[SemiElliptical, FlatWindow, LorentzianSum, Tabulated],
    PField(discriminator="kind"),
]


__all__ = [
    "QuadratureSegment",
    "SpectralModel",
    "SemiElliptical",
    "FlatWindow",
    "LorentzianTerm",
    "LorentzianSum",
    "Tabulated",
    "SpectralModelSpec",
]


# The End
