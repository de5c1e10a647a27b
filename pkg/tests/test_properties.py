# -*- coding: utf-8 -*-
"""Seeded randomized checks of the fitting, inversion, forward and tiling laws."""

from __future__ import annotations

import math

import numpy as np
import pytest

from pseudomode.core.bath import (
    ExpFit,
    FlatWindow,
    KernelSample,
    LorentzianSum,
    LorentzianTerm,
    SemiElliptical,
    Tabulated,
    kernel_fourier_transform,
)
from pseudomode.core.fitting import prony_fit, prony_workspace
from pseudomode.core.forward import (
    decompose_terms,
    effective_kernel,
    effective_kernel_ode_oracle,
    effective_kernel_series,
    effective_spectral_density_grid,
    spectral_density_from_terms,
)
from pseudomode.core.inversion import (
    InversionChoices,
    invert,
    two_mode_feasibility,
    two_mode_fit,
    two_mode_rates,
    two_mode_symmetric_density,
)
from pseudomode.core.scattering import (
    Lead,
    ScatterSetup,
    effective_transmission,
    extended_transmission,
    true_transmission,
)
from pseudomode.core.tiling import TilingSpec, eta1, tiling_spectral_density
from tests.conftest import BathFactory


GRID = np.linspace(-3.0, 3.0, 121)


def _random_fit(rng: np.random.Generator, n: int) -> ExpFit:
    """Return ``n`` distinct decaying terms whose amplitudes sum to a positive real."""

    energies = rng.uniform(-1.5, 1.5, size=n)
    rates = rng.uniform(0.2, 1.5, size=n)
    kappa = rng.uniform(0.2, 1.0, size=n) * np.exp(1j * rng.uniform(-np.pi, np.pi, size=n))
    kappa[-1] = rng.uniform(1.0, 2.0) - kappa[:-1].sum()
    return ExpFit.from_arrays(kappa, energies, rates)


def _relative(found: np.ndarray, expected: np.ndarray) -> float:
    return float(np.max(np.abs(found - expected)) / max(np.max(np.abs(expected)), 1e-300))


@pytest.mark.parametrize("seed", range(50))
def test_prony_recovers_random_four_term_kernels(seed: int) -> None:
    """Ensure exact four-term kernels are recovered term by term."""

    rng = np.random.default_rng(seed)
    energies = np.linspace(-0.9, 0.9, 4) + rng.uniform(-0.05, 0.05, size=4)
    rates = rng.uniform(0.3, 1.2, size=4)
    amplitudes = rng.uniform(0.2, 0.6, size=4) * np.exp(1j * rng.uniform(-np.pi, np.pi, size=4))
    truth = ExpFit.from_arrays(amplitudes, energies, rates)
    fit = prony_fit(KernelSample.from_fit(truth, step=0.25, half_count=12), 4)
    order = np.argsort(fit.energies)
    np.testing.assert_allclose(fit.energies[order], energies, atol=1e-6)
    np.testing.assert_allclose(fit.rates[order], rates, atol=1e-6)
    np.testing.assert_allclose(fit.scalar_amplitudes()[order], amplitudes, atol=1e-6)


@pytest.mark.parametrize("seed", range(10))
def test_prony_fit_of_a_symmetric_density_closes_under_conjugation(seed: int) -> None:
    """Ensure every term of an even density has its partner at ``-ε`` with ``κ̄``."""

    rng = np.random.default_rng(1000 + seed)
    energies = np.array([0.4, 0.9, 1.4]) + rng.uniform(-0.1, 0.1, size=3)
    rates = rng.uniform(0.3, 1.0, size=3)
    amplitudes = rng.uniform(0.2, 0.6, size=3) * np.exp(1j * rng.uniform(-1.0, 1.0, size=3))
    truth = ExpFit.from_arrays(
        np.concatenate([amplitudes, amplitudes.conj()]),
        np.concatenate([energies, -energies]),
        np.concatenate([rates, rates]),
    )
    samples = KernelSample.from_fit(truth, step=0.25, half_count=16)
    assert np.max(np.abs(samples.values.imag)) < 1e-12
    fit = prony_fit(samples, 6)
    kappa = fit.scalar_amplitudes()
    for k in range(len(fit)):
        partner = int(np.argmin(np.abs(fit.energies + fit.energies[k]) + np.abs(fit.rates - fit.rates[k])))
        assert fit.energies[partner] == pytest.approx(-fit.energies[k], abs=1e-6)
        assert fit.rates[partner] == pytest.approx(fit.rates[k], abs=1e-6)
        assert abs(kappa[partner] - np.conj(kappa[k])) < 1e-6


@pytest.mark.parametrize("modes", [1, 2, 3])
def test_hankel_rank_matches_an_exact_fit(modes: int) -> None:
    """Ensure a kernel of exactly ``L`` terms has Hankel rank ``L`` and zero residual."""

    truth = ExpFit.from_arrays([0.5, 0.3 - 0.2j, 0.2][:modes], [-0.6, 0.1, 0.8][:modes], [0.4, 0.7, 1.0][:modes])
    fit, workspace = prony_workspace(KernelSample.from_fit(truth, step=0.25, half_count=10), modes)
    assert workspace.sigma[modes] < 1e-10 * workspace.sigma[0]
    assert fit.residual < 1e-10


@pytest.mark.parametrize("seed", range(100))
def test_inversion_reproduces_random_fits(seed: int) -> None:
    """Ensure ``invert`` builds a Hermitian ``Λ`` and diagonal ``Γ`` that reproduce the fit."""

    rng = np.random.default_rng(2000 + seed)
    fit = _random_fit(rng, 1 + seed % 5)
    result = invert(fit)
    bath = result.bath
    assert result.diagnostics.kappa_error < 1e-9
    assert result.diagnostics.exponent_error < 1e-9
    np.testing.assert_allclose(bath.lam, bath.lam.conj().T, atol=1e-12)
    np.testing.assert_allclose(-(bath.w + bath.w.conj().T), np.diag(bath.rates), atol=1e-10)
    times = np.linspace(0.0, 6.0, 13)
    found = effective_kernel_series(bath, times)
    expected = fit.kernel_series(times)
    assert _relative(found, expected) < 1e-9


@pytest.mark.parametrize("seed", range(20))
def test_inversion_does_not_depend_on_the_gauge(seed: int) -> None:
    """Ensure two admissible choices give the same effective density."""

    rng = np.random.default_rng(3000 + seed)
    fit = _random_fit(rng, 3)
    plain = invert(fit)
    other = invert(fit, InversionChoices(u=[1.0, 0.8 + 0.3j, 1.3], b=[[2.5]], cross=[0.1j]))
    assert not np.allclose(plain.gram, other.gram)
    first = effective_spectral_density_grid(plain.bath, GRID)
    second = effective_spectral_density_grid(other.bath, GRID)
    np.testing.assert_allclose(second, first, atol=1e-9 * max(1.0, float(np.abs(first).max())))


@pytest.mark.parametrize("seed", range(200))
def test_two_mode_feasibility_agrees_with_density_sign(seed: int) -> None:
    """Ensure the closed-form test predicts whether the density dips below zero."""

    rng = np.random.default_rng(4000 + seed)
    alpha = rng.uniform(0.2, 2.0)
    gamma = rng.uniform(0.1, 2.0)
    epsilon = rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 2.0)
    # |β| is drawn as a multiple q of αγ/2|ε|, away from the boundary q = 1
    q = rng.choice([rng.uniform(0.1, 0.9), rng.uniform(1.1, 2.0)])
    beta = rng.choice([-1.0, 1.0]) * q * alpha * gamma / (2.0 * abs(epsilon))
    verdict = two_mode_feasibility(alpha, beta, epsilon, gamma)

    scale = abs(epsilon) + gamma
    omegas = scale * np.tan(np.linspace(-0.5 * math.pi, 0.5 * math.pi, 10_002)[1:-1])
    density = two_mode_symmetric_density(alpha, beta, epsilon, gamma, omegas)
    negative = density.min() < -1e-12 * np.abs(density).max()
    assert verdict.feasible == (not negative)
    assert verdict.feasible == (q < 1.0)
    if verdict.feasible:
        low, high = two_mode_rates(alpha, beta, epsilon, gamma, verdict.witness)
        assert low >= 0.0
        result = invert(two_mode_fit(alpha, beta, epsilon, gamma), InversionChoices(a_prime=verdict.witness))
        np.testing.assert_allclose(np.sort(result.bath.rates), [low, high], atol=1e-10)


@pytest.mark.parametrize("seed", range(100))
def test_forward_routes_agree_on_random_baths(seed: int) -> None:
    """Ensure the matrix exponential matches direct integration and terms match the resolvent."""

    bath = BathFactory(np.random.default_rng(5000 + seed)).bath(1 + seed % 6, dim=1 + seed % 2)
    np.testing.assert_allclose(effective_kernel(bath, 1.3), effective_kernel_ode_oracle(bath, 1.3), atol=1e-8)
    resolvent = effective_spectral_density_grid(bath, GRID)
    terms = spectral_density_from_terms(decompose_terms(bath), GRID)
    np.testing.assert_allclose(terms, resolvent, atol=1e-10 * max(1.0, float(np.abs(resolvent).max())))


@pytest.mark.parametrize("seed", range(5))
def test_kernel_transform_gives_the_density(seed: int) -> None:
    """Ensure the Fourier transform of the sampled kernel is the effective density."""

    bath = BathFactory(np.random.default_rng(6000 + seed)).bath(3, dim=2, rate_range=(0.5, 1.5))
    omegas = np.linspace(-2.0, 2.0, 9)
    transform = kernel_fourier_transform(lambda times: effective_kernel_series(bath, times), omegas, t_max=60.0)
    np.testing.assert_allclose(transform, effective_spectral_density_grid(bath, omegas), atol=1e-5)


def test_linear_density_term_cancels_in_a_tiling() -> None:
    """Ensure a linear slope leaves the tiled density at ``η₁ J`` near the window centre."""

    slope, offset = 0.2, 1.0
    support = np.linspace(-1.0, 1.0, 9)
    linear = Tabulated(grid=list(support), values=[[[slope * w + offset]] for w in support])
    flat = FlatWindow(gamma0=1.0, omega_min=-1.0, omega_max=1.0)
    spec = TilingSpec(-1.0, 1.0, 400)
    nodes = spec.centers[np.abs(spec.centers) <= 0.1]
    target = slope * nodes + offset
    tiled = tiling_spectral_density(linear, spec, nodes)[:, 0, 0]
    window = tiling_spectral_density(flat, spec, nodes)[:, 0, 0]
    np.testing.assert_allclose(tiled / target, window, atol=1e-4)
    np.testing.assert_allclose(tiled / target, eta1(0.0), atol=5e-3)


@pytest.mark.parametrize("seed", range(5))
def test_transmissions_are_not_negative(seed: int) -> None:
    """Ensure every transmission entry is non-negative up to roundoff."""

    factory = BathFactory(np.random.default_rng(7000 + seed))
    h_s = factory.hermitian(2, scale=0.5)
    omegas = np.linspace(-2.5, 2.5, 40)
    pseudo = ScatterSetup(h_s, (Lead("L", factory.bath(3, dim=2)), Lead("R", factory.bath(2, dim=2))))
    for table in (
        effective_transmission(pseudo, omegas),
        extended_transmission(pseudo, omegas),
    ):
        assert table.values.min() >= -1e-12
    exact = ScatterSetup(
        h_s[:1, :1],
        (
            Lead("L", SemiElliptical(halfwidth=1.5)),
            Lead("R", LorentzianSum(terms=[LorentzianTerm(amplitude=0.4, center=0.2, width=0.6)])),
        ),
    )
    assert true_transmission(exact, omegas).values.min() >= -1e-12


# The End
