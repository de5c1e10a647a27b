# -*- coding: utf-8 -*-
"""
test_bath

Tests for spectral models, memory kernels, occupations and exponential fits.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError as SchemaError

from pseudomode.core.bath import (
    ExpFit,
    ExpTerm,
    FermiSpec,
    FlatWindow,
    KernelSample,
    LorentzianSum,
    LorentzianTerm,
    PseudomodeBath,
    SemiElliptical,
    Tabulated,
    correlation_pair,
    kernel_fourier_transform,
    kernel_symmetry_extend,
    memory_kernel,
    memory_kernel_series,
)
from pseudomode.core.configuration import PseudomodeSettings
from pseudomode.core.exceptions import ValidationError


class TestSpectralModels:
    """Validate the spectral density families."""

    def test_semi_elliptical_profile(self) -> None:
        """Ensure the semicircle peaks at the centre and vanishes outside its band."""
        model = SemiElliptical(halfwidth=2.0, height=3.0)
        values = model.evaluate_grid(np.array([0.0, 1.0, 2.0, 2.5]))[:, 0, 0]
        assert values[0] == pytest.approx(3.0)
        assert values[1] == pytest.approx(3.0 * math.sqrt(0.75))
        assert values[2] == 0.0
        assert values[3] == 0.0

    def test_matrix_coupling(self) -> None:
        """Ensure separable families scale a symmetric coupling matrix."""
        model = FlatWindow(coupling=[[1.0, 0.5], [0.5, 2.0]])
        value = model.evaluate(0.3)
        assert model.dim == 2
        np.testing.assert_allclose(value, [[1.0, 0.5], [0.5, 2.0]])

    def test_asymmetric_coupling_rejected(self) -> None:
        """Ensure a non-symmetric coupling matrix fails validation."""
        with pytest.raises(SchemaError):
            FlatWindow(coupling=[[1.0, 0.5], [0.2, 1.0]])

    def test_flat_window_order(self) -> None:
        """Ensure an empty window fails validation."""
        with pytest.raises(SchemaError):
            FlatWindow(omega_min=1.0, omega_max=1.0)

    def test_zeroth_moment(self) -> None:
        """Ensure the zeroth moment of the unit semicircle is one quarter."""
        assert SemiElliptical().zeroth_moment()[0, 0] == pytest.approx(0.25)

    def test_lorentzian_sum_profile(self) -> None:
        """Ensure each peak has height ``4a/γ`` at its centre."""
        model = LorentzianSum(terms=[LorentzianTerm(amplitude=0.5, center=0.3, width=0.2)])
        assert model.evaluate(0.3)[0, 0] == pytest.approx(4 * 0.5 / 0.2)
        assert model.physical

    def test_tabulated_interpolation(self) -> None:
        """Ensure a spline through samples of the semicircle reproduces it between nodes."""
        grid = np.linspace(-1.0, 1.0, 401)
        reference = SemiElliptical()
        table = Tabulated(grid=grid.tolist(), values=reference.evaluate_grid(grid).tolist())
        points = np.array([-0.5, 0.0, 0.33])
        np.testing.assert_allclose(
            table.evaluate_grid(points)[:, 0, 0], reference.evaluate_grid(points)[:, 0, 0], atol=1e-4
        )
        assert table.evaluate(1.5)[0, 0] == 0.0

    def test_tabulated_rejects_unsorted_grid(self) -> None:
        """Ensure a non-increasing grid fails validation."""
        with pytest.raises(ValueError):
            Tabulated(grid=[0.0, 2.0, 1.0, 3.0], values=[[[1.0]]] * 4)


class TestMemoryKernel:
    """Validate closed-form and quadrature kernels."""

    def test_flat_window_value(self) -> None:
        """Ensure the unit window gives ``sin(1)/π`` at ``t = 1``."""
        value = memory_kernel(FlatWindow(), 1.0)[0, 0]
        assert value.real == pytest.approx(0.26785, abs=1e-5)
        assert value.imag == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("t", [0.0, 0.7, 3.0, -1.3])
    def test_semi_elliptical_quadrature_matches_closed_form(self, t: float) -> None:
        """Ensure forced quadrature agrees with the Bessel closed form."""
        model = SemiElliptical(halfwidth=1.5, height=0.8)
        closed = memory_kernel(model, t)
        numeric = memory_kernel(model, t, method="quadrature")
        np.testing.assert_allclose(numeric, closed, atol=1e-7)

    def test_flat_window_quadrature_matches_closed_form(self) -> None:
        """Ensure quadrature reproduces the flat-window kernel off the real axis."""
        model = FlatWindow(omega_min=-0.5, omega_max=2.0, gamma0=1.2)
        np.testing.assert_allclose(
            memory_kernel(model, 2.2, method="quadrature"), memory_kernel(model, 2.2), atol=1e-7
        )

    def test_lorentzian_quadrature_matches_closed_form(self) -> None:
        """Ensure oscillatory tails integrate to the exponential kernel."""
        model = LorentzianSum(terms=[LorentzianTerm(amplitude=1.0, center=0.2, width=1.0)])
        settings = PseudomodeSettings(quadrature_tol=1e-6)
        numeric = memory_kernel(model, 0.5, method="quadrature", settings=settings)
        np.testing.assert_allclose(numeric, memory_kernel(model, 0.5), atol=1e-5)

    def test_hermitian_pair(self) -> None:
        """Ensure ``χ(-t) = χ(t)†``."""
        model = FlatWindow(omega_min=-0.3, omega_max=1.7, coupling=[[1.0, 0.4], [0.4, 0.5]])
        forward = memory_kernel(model, 0.9)
        backward = memory_kernel(model, -0.9)
        np.testing.assert_allclose(backward, forward.conj().T, atol=1e-12)

    def test_series_shape(self) -> None:
        """Ensure the series stacks one matrix per time."""
        values = memory_kernel_series(SemiElliptical(), np.linspace(0.0, 5.0, 11))
        assert values.shape == (11, 1, 1)
        assert values[0, 0, 0].real == pytest.approx(0.25)

    def test_unknown_method(self) -> None:
        """Ensure unsupported kernel methods are rejected."""
        with pytest.raises(ValidationError):
            memory_kernel(SemiElliptical(), 1.0, method="fft")


class TestOccupation:
    """Validate Fermi occupations and the correlation pair."""

    def test_bounds_and_limits(self) -> None:
        """Ensure occupations stay in ``[0, 1]`` and degenerate cases are exact."""
        grid = np.linspace(-50.0, 50.0, 101)
        values = FermiSpec(beta=40.0, mu=0.0).occupation(grid)
        assert np.all((values >= 0.0) & (values <= 1.0))
        assert FermiSpec(beta=1.0, mu=-math.inf).occupation(0.3) == 0.0
        assert FermiSpec(beta=1.0, mu=math.inf).occupation(0.3) == 1.0
        step = FermiSpec(beta=math.inf, mu=0.1).occupation(np.array([0.0, 0.1, 0.2]))
        np.testing.assert_allclose(step, [1.0, 0.5, 0.0])

    def test_pair_sums_to_kernel(self) -> None:
        """Ensure ``C⁺ + C⁻`` equals the memory kernel at ``-t``."""
        model = FlatWindow(omega_min=-1.0, omega_max=1.0)
        fermi = FermiSpec(beta=5.0, mu=0.2)
        plus, minus = correlation_pair(model, fermi, 0.8)
        np.testing.assert_allclose(plus + minus, memory_kernel(model, -0.8), atol=1e-7)

    def test_empty_bath(self) -> None:
        """Ensure an empty bath has no occupied correlation."""
        plus, minus = correlation_pair(SemiElliptical(), FermiSpec(mu=-math.inf), 0.4)
        assert np.all(plus == 0.0)
        np.testing.assert_allclose(minus, memory_kernel(SemiElliptical(), -0.4))


class TestExpFit:
    """Validate exponential terms and fits."""

    def test_lorentzian_term_density(self) -> None:
        """Ensure a real power-0 term gives ``aγ/(x² + γ²/4)``."""
        fit = ExpFit.from_arrays([0.7], [0.3], [0.4])
        omegas = np.array([-1.0, 0.3, 1.2])
        x = omegas - 0.3
        expected = 0.7 * 0.4 / (x * x + 0.04)
        np.testing.assert_allclose(fit.spectral_density_grid(omegas)[:, 0, 0], expected)

    def test_lorentzian_and_anti_lorentzian_shares_sum(self) -> None:
        """Ensure the two shares of a complex term add up to its contribution."""
        term = ExpTerm(np.array([[0.5 + 0.3j]]), energy=0.1, rate=0.6)
        omegas = np.linspace(-2.0, 2.0, 21)
        total = term.lorentzian_part(omegas) + term.anti_lorentzian_part(omegas)
        np.testing.assert_allclose(total, term.spectral_contribution(omegas), atol=1e-12)

    def test_retarded_transform_splits_into_density_and_shift(self) -> None:
        """Ensure the anti-Hermitian part of the causal transform is ``-iJ/2``."""
        fit = ExpFit.from_arrays([0.4 + 0.2j, 0.3 - 0.1j], [0.5, -0.4], [0.3, 0.8])
        omegas = np.linspace(-2.0, 2.0, 17)
        sigma = fit.self_energy_grid(omegas)
        anti = 0.5 * (sigma - np.conj(np.swapaxes(sigma, 1, 2)))
        np.testing.assert_allclose(anti, -0.5j * fit.spectral_density_grid(omegas), atol=1e-12)

    def test_kernel_negative_times(self) -> None:
        """Ensure the fit kernel obeys ``χ(-t) = χ(t)†``."""
        fit = ExpFit.from_arrays([0.4 + 0.2j], [0.5], [0.3])
        values = fit.kernel_series(np.array([-0.7, 0.7]))
        np.testing.assert_allclose(values[0], values[1].conj().T)

    def test_fourier_transform_recovers_density(self) -> None:
        """Ensure the sampled transform reproduces the analytic spectral density."""
        fit = ExpFit.from_arrays([1.0], [0.0], [1.0])
        omegas = np.array([-1.0, 0.0, 0.5])
        transform = kernel_fourier_transform(fit.kernel_series, omegas, t_max=60.0)
        np.testing.assert_allclose(transform, fit.spectral_density_grid(omegas), atol=1e-5)

    def test_symmetry_extension(self) -> None:
        """Ensure extension mirrors samples to negative times."""
        times, values = kernel_symmetry_extend([0.0, 1.0, 2.0], np.array([1.0, 0.5j, 0.25]))
        np.testing.assert_allclose(times, [-2.0, -1.0, 0.0, 1.0, 2.0])
        assert values[1, 0, 0] == pytest.approx(-0.5j)

    def test_mismatched_terms(self) -> None:
        """Ensure terms with different ``n_S`` cannot share a fit."""
        with pytest.raises(ValidationError):
            ExpFit(terms=(ExpTerm(np.eye(1), 0.0, 1.0), ExpTerm(np.eye(2), 0.0, 1.0)))

    def test_even_sample_count_rejected(self) -> None:
        """Ensure Prony samples need an odd count."""
        with pytest.raises(ValidationError):
            KernelSample(step=0.1, values=np.ones(4))


class TestPseudomodeBath:
    """Validate pseudomode parameter containers."""

    def test_generator(self) -> None:
        """Ensure ``W = -iΛ - Γ/2``."""
        bath = PseudomodeBath.diagonal([0.5], [0.2], [1.0])
        assert bath.w[0, 0] == pytest.approx(-0.5j - 0.1)
        assert bath.n == 1 and bath.dim == 1

    def test_non_hermitian_lambda(self) -> None:
        """Ensure a non-Hermitian ``Λ`` is rejected."""
        with pytest.raises(ValidationError):
            PseudomodeBath(lam=[[0.0, 1.0], [0.0, 0.0]], rates=[0.1, 0.1], zeta=[1.0, 0.0])

    def test_from_generator_round_trip(self, baths) -> None:
        """Ensure a bath is recovered from its own generator."""
        bath = baths.bath(3, dim=2)
        rebuilt = PseudomodeBath.from_w(bath.w, bath.zeta)
        np.testing.assert_allclose(rebuilt.lam, bath.lam, atol=1e-12)
        np.testing.assert_allclose(rebuilt.rates, bath.rates, atol=1e-12)

    def test_rotation_preserves_the_resolvent(self) -> None:
        """Ensure mixing modes of equal rate leaves ``ζ†(iW - ω)⁻¹ζ`` unchanged."""
        bath = PseudomodeBath.diagonal([-0.3, 0.4, 1.0], [0.5, 0.5, 0.9], [1.0, 0.6j, 0.3])
        c, s = math.cos(0.7), math.sin(0.7)
        u = np.array([[c, 1j * s, 0.0], [1j * s, c, 0.0], [0.0, 0.0, 1.0]])
        rotated = bath.rotated(u)
        np.testing.assert_allclose(rotated.rates, bath.rates, atol=1e-12)
        for omega in (-0.5, 0.2):
            before = bath.zeta.conj().T @ np.linalg.solve(1j * bath.w - omega * np.eye(3), bath.zeta)
            after = rotated.zeta.conj().T @ np.linalg.solve(1j * rotated.w - omega * np.eye(3), rotated.zeta)
            np.testing.assert_allclose(after, before, atol=1e-12)

    def test_rotation_must_keep_rates_diagonal(self) -> None:
        """Ensure mixing modes of different rate is rejected."""
        bath = PseudomodeBath.diagonal([0.0, 0.0], [0.2, 0.8], [1.0, 1.0])
        u = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
        with pytest.raises(ValidationError):
            bath.rotated(u)
        with pytest.raises(ValidationError):
            bath.rotated(2.0 * np.eye(2))

    def test_physical_flag(self) -> None:
        """Ensure negative rates are flagged."""
        assert not PseudomodeBath.diagonal([0.0, 1.0], [0.2, -0.1], [1.0, 1.0]).physical


# The End
