# -*- coding: utf-8 -*-
"""conftest

Shared fixtures for the pseudomode test-suite.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

from typing import Callable

import numpy as np
import pytest

from pseudomode.core.bath import PseudomodeBath
from pseudomode.core.configuration import reset_settings


class BathFactory:
    """Draw random pseudomode baths from a seeded generator."""

    def __init__(self, rng: np.random.Generator) -> None:
        """Store the generator used for every draw."""

        self._rng = rng

    def hermitian(self, n: int, scale: float = 1.0) -> np.ndarray:
        """Return a random Hermitian ``n × n`` matrix."""

        raw = self._rng.normal(size=(n, n)) + 1j * self._rng.normal(size=(n, n))
        return scale * 0.5 * (raw + raw.conj().T)

    def bath(
        self,
        n: int,
        dim: int = 1,
        *,
        rate_range: tuple[float, float] = (0.2, 1.5),
    ) -> PseudomodeBath:
        """Return a physical bath with ``n`` modes coupled to ``dim`` sites."""

        lam = self.hermitian(n)
        rates = self._rng.uniform(*rate_range, size=n)
        zeta = self._rng.normal(size=(n, dim)) + 1j * self._rng.normal(size=(n, dim))
        return PseudomodeBath(lam=lam, rates=rates, zeta=0.5 * zeta)

    def diagonal_bath(self, n: int) -> PseudomodeBath:
        """Return a bath with diagonal ``Λ`` and real couplings."""

        energies = self._rng.uniform(-1.0, 1.0, size=n)
        rates = self._rng.uniform(0.2, 1.0, size=n)
        zeta = self._rng.uniform(0.2, 1.0, size=n)
        return PseudomodeBath.diagonal(energies, rates, zeta)


@pytest.fixture(autouse=True)
def fresh_settings() -> None:
    """Start every test from default tolerances."""

    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng() -> np.random.Generator:
    """Return a seeded generator."""

    return np.random.default_rng(20240611)


@pytest.fixture
def baths(rng: np.random.Generator) -> BathFactory:
    """Return a random bath factory."""

    return BathFactory(rng)


@pytest.fixture
def omega_grid() -> Callable[[float, float, int], np.ndarray]:
    """Return a helper building uniform frequency grids."""

    def build(lo: float = -3.0, hi: float = 3.0, count: int = 201) -> np.ndarray:
        return np.linspace(lo, hi, count)

    return build


# The End
