# -*- coding: utf-8 -*-
"""
fermi

Fermi occupation of a bath at inverse temperature β and chemical potential μ.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field as PField
from scipy.special import expit


class FermiSpec(BaseModel):
    """Occupation ``f(ω) = 1 / (exp(β(ω - μ)) + 1)``.

    ``beta = inf`` gives the zero-temperature step; ``mu = ±inf`` gives an
    empty or completely filled bath.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    beta: float = PField(1.0, ge=0.0)
    mu: float = 0.0

    @property
    def empty(self) -> bool:
        """Return ``True`` when ``f`` vanishes identically."""
        return self.mu == -math.inf

    @property
    def filled(self) -> bool:
        """Return ``True`` when ``f`` equals one identically."""
        return self.mu == math.inf

    def occupation(self, omega: np.ndarray | float) -> np.ndarray:
        """Return ``f(ω)`` on ``omega``; values always lie in ``[0, 1]``."""
        grid = np.asarray(omega, dtype=float)
        if self.empty:
            return np.zeros_like(grid)
        if self.filled:
            return np.ones_like(grid)
        if math.isinf(self.beta):
            return np.where(grid < self.mu, 1.0, np.where(grid > self.mu, 0.0, 0.5))
        return expit(-self.beta * (grid - self.mu))


__all__ = ["FermiSpec"]


# The End
