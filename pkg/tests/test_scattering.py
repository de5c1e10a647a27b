# -*- coding: utf-8 -*-
"""
test_scattering

Tests for level shifts, self-energies and lead-to-lead transmissions.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import numpy as np
import pytest

from pseudomode.core.bath import (
    ExpFit,
    FlatWindow,
    LorentzianSum,
    LorentzianTerm,
    PseudomodeBath,
    SemiElliptical,
)
from pseudomode.core.exceptions import ValidationError
from pseudomode.core.forward import effective_spectral_density_grid
from pseudomode.core.scattering import (
    Lead,
    ResidualTable,
    ScatterSetup,
    effective_transmission,
    extended_green_blocks,
    extended_matrix,
    extended_transmission,
    level_shift,
    resolved_couplings,
    self_energy,
    transmission_gap,
    true_transmission,
)


GRID = np.linspace(-3.0, 3.0, 61)


def _lorentzian_pair(shift: float = 0.0) -> tuple[LorentzianSum, LorentzianSum]:
    left = LorentzianSum(terms=[LorentzianTerm(amplitude=0.3, center=shift, width=0.8)])
    right = LorentzianSum(terms=[LorentzianTerm(amplitude=0.3, center=shift, width=0.8)])
    return left, right


def _matching_bath(model: LorentzianSum) -> PseudomodeBath:
    energies = [term.center for term in model.terms]
    rates = [term.width for term in model.terms]
    zeta = [np.sqrt(term.amplitude) for term in model.terms]
    return PseudomodeBath.diagonal(energies, rates, zeta)


class TestLevelShift:
    """Validate the Hermitian part of the self-energy."""

    def test_semi_elliptical_outside_the_band(self) -> None:
        """Ensure ``Υ(2) = (2 - √3)/2`` for the unit semicircle."""
        assert level_shift(SemiElliptical(), 2.0)[0, 0] == pytest.approx(0.13397, abs=1e-5)

    @pytest.mark.parametrize("omega", [0.3, -0.7, 2.0])
    def test_semi_elliptical_quadrature(self, omega: float) -> None:
        """Ensure principal-value quadrature matches the closed form."""
        model = SemiElliptical(halfwidth=1.2, height=0.9)
        np.testing.assert_allclose(
            level_shift(model, omega, method="quadrature"), level_shift(model, omega), atol=1e-7
        )

    @pytest.mark.parametrize("omega", [0.3, 1.7])
    def test_flat_window_quadrature(self, omega: float) -> None:
        """Ensure the logarithmic closed form matches quadrature."""
        model = FlatWindow(omega_min=-1.0, omega_max=1.0, gamma0=0.7)
        np.testing.assert_allclose(
            level_shift(model, omega, method="quadrature"), level_shift(model, omega), atol=1e-7
        )

    def test_flat_window_edge(self) -> None:
        """Ensure the shift diverges at a window edge."""
        with pytest.raises(ValidationError):
            level_shift(FlatWindow(), 1.0)

    def test_lorentzian_model_matches_fit(self) -> None:
        """Ensure a Lorentzian model and the equivalent fit share their shift."""
        model = LorentzianSum(terms=[LorentzianTerm(amplitude=0.4, center=0.2, width=0.6)])
        fit = ExpFit.from_arrays([0.4], [0.2], [0.6])
        for omega in (-1.0, 0.2, 0.9):
            np.testing.assert_allclose(level_shift(model, omega), level_shift(fit, omega).real, atol=1e-12)

    def test_pseudomode_self_energy(self) -> None:
        """Ensure ``-2 Im Σ`` of a bath equals its effective density."""
        bath = PseudomodeBath.diagonal([0.0, 0.5], [0.4, 0.7], [0.6, 0.3])
        for omega in (-0.4, 0.5):
            sigma = self_energy(bath, omega)
            expected = effective_spectral_density_grid(bath, [omega])[0]
            np.testing.assert_allclose(-2.0 * sigma.imag, expected.real, atol=1e-12)

    def test_unknown_method(self) -> None:
        """Ensure unsupported methods are rejected."""
        with pytest.raises(ValidationError):
            level_shift(SemiElliptical(), 0.1, method="kramers")


class TestSetup:
    """Validate scattering setups."""

    def test_needs_two_leads(self) -> None:
        """Ensure a single lead is rejected."""
        with pytest.raises(ValidationError):
            ScatterSetup(np.zeros((1, 1)), (Lead("L", SemiElliptical()),))

    def test_unique_labels(self) -> None:
        """Ensure lead labels are unique."""
        with pytest.raises(ValidationError):
            ScatterSetup(np.zeros((1, 1)), (Lead("L", SemiElliptical()), Lead("L", SemiElliptical())))

    def test_dimension_mismatch(self) -> None:
        """Ensure every lead couples to all system sites."""
        with pytest.raises(ValidationError):
            ScatterSetup(np.zeros((2, 2)), (Lead("L", SemiElliptical()), Lead("R", SemiElliptical())))

    def test_non_hermitian_system(self) -> None:
        """Ensure ``H_S`` must be Hermitian."""
        with pytest.raises(ValidationError):
            ScatterSetup(np.array([[0.0, 1.0], [0.0, 0.0]]), ())

    def test_channel_order(self) -> None:
        """Ensure residual channels follow the lead order."""
        setup = ScatterSetup.from_mapping(
            np.zeros((1, 1)),
            {
                "L": PseudomodeBath.diagonal([0.0, 1.0], [0.5, 0.5], [1.0, 1.0]),
                "R": PseudomodeBath.diagonal([0.0], [0.5], [1.0]),
            },
        )
        assert setup.channels() == (("L", 0), ("L", 1), ("R", 0))
        assert extended_matrix(setup).shape == (4, 4)


class TestTransmission:
    """Validate true, effective and residual-resolved transmissions."""

    def test_resonant_transmission_is_one(self) -> None:
        """Ensure symmetric leads transmit perfectly at the level energy."""
        left, right = _lorentzian_pair(0.4)
        setup = ScatterSetup(np.array([[0.4]]), (Lead("L", left), Lead("R", right)))
        table = true_transmission(setup, [0.4])
        assert table.entry("L", "R")[0] == pytest.approx(1.0, abs=1e-12)

    def test_true_transmission_is_symmetric(self) -> None:
        """Ensure ``T_LR = T_RL`` for real symmetric couplings."""
        setup = ScatterSetup(
            np.array([[0.0, 0.3], [0.3, 0.2]]),
            (
                Lead("L", SemiElliptical(coupling=[[1.0, 0.0], [0.0, 0.0]])),
                Lead("R", SemiElliptical(coupling=[[0.0, 0.0], [0.0, 1.0]])),
            ),
        )
        table = true_transmission(setup, np.linspace(-0.9, 0.9, 7))
        np.testing.assert_allclose(table.entry("L", "R"), table.entry("R", "L"), atol=1e-12)
        assert np.all(table.entry("L", "R") <= 1.0 + 1e-12)

    def test_effective_matches_true_for_matched_leads(self) -> None:
        """Ensure exact pseudomode leads reproduce the true transmission."""
        left = LorentzianSum(
            terms=[
                LorentzianTerm(amplitude=0.3, center=-0.5, width=0.6),
                LorentzianTerm(amplitude=0.2, center=0.7, width=0.9),
            ]
        )
        right = LorentzianSum(terms=[LorentzianTerm(amplitude=0.4, center=0.1, width=0.5)])
        h_s = np.array([[0.1]])
        exact = true_transmission(ScatterSetup(h_s, (Lead("L", left), Lead("R", right))), GRID)
        pseudo = ScatterSetup(h_s, (Lead("L", _matching_bath(left)), Lead("R", _matching_bath(right))))
        effective = effective_transmission(pseudo, GRID)
        assert transmission_gap(effective, exact) < 1e-10

    def test_fit_leads_match_model_leads(self) -> None:
        """Ensure an exponential fit lead behaves like the Lorentzian model it encodes."""
        left, right = _lorentzian_pair(0.0)
        fit = ExpFit.from_arrays([0.3], [0.0], [0.8])
        h_s = np.array([[0.2]])
        by_model = true_transmission(ScatterSetup(h_s, (Lead("L", left), Lead("R", right))), GRID)
        by_fit = true_transmission(ScatterSetup(h_s, (Lead("L", fit), Lead("R", right))), GRID)
        assert transmission_gap(by_model, by_fit) < 1e-12

    def test_aggregated_residual_matches_effective(self, baths) -> None:
        """Ensure channel sums reproduce the effective lead-to-lead transmission."""
        setup = ScatterSetup(
            np.array([[0.2]]), (Lead("L", baths.bath(3)), Lead("R", baths.bath(2)))
        )
        effective = effective_transmission(setup, GRID)
        aggregated = extended_transmission(setup, GRID).aggregate()
        np.testing.assert_allclose(aggregated.entry("L", "R"), effective.entry("L", "R"), atol=1e-10)
        np.testing.assert_allclose(aggregated.entry("R", "L"), effective.entry("R", "L"), atol=1e-10)

    def test_block_assembly_matches_inversion(self, baths) -> None:
        """Ensure the block formulas give the same extended Green's function."""
        setup = ScatterSetup(
            np.array([[0.0, 0.4], [0.4, 0.3]]),
            (Lead("L", baths.bath(2, dim=2)), Lead("R", baths.bath(3, dim=2))),
        )
        q = extended_matrix(setup)
        omega = 0.37
        direct = np.linalg.inv(omega * np.eye(q.shape[0]) - q)
        np.testing.assert_allclose(extended_green_blocks(setup, omega).assemble(), direct, atol=1e-11)
        by_blocks = extended_transmission(setup, GRID, method="blocks")
        by_inverse = extended_transmission(setup, GRID)
        np.testing.assert_allclose(by_blocks.values, by_inverse.values, atol=1e-11)

    def test_resolved_couplings_sum_to_density(self, baths) -> None:
        """Ensure both channel sums equal ``J_eff``."""
        bath = baths.bath(3, dim=2)
        resolved = resolved_couplings(bath, 0.25)
        expected = effective_spectral_density_grid(bath, [0.25])[0]
        np.testing.assert_allclose(resolved.total_plus, expected, atol=1e-12)
        np.testing.assert_allclose(resolved.total_minus, expected, atol=1e-12)

    def test_residual_rows(self) -> None:
        """Ensure residual rows list every channel pair."""
        table = ResidualTable(
            np.array([0.0]), (("L", 0), ("R", 0)), np.array([[[0.0, 0.5], [0.5, 0.0]]])
        )
        rows = list(table.rows())
        assert len(rows) == 4
        assert rows[1] == (0.0, "L", 0, "R", 0, 0.5)
        assert table.labels == ("L", "R")

    def test_effective_needs_pseudomode_leads(self) -> None:
        """Ensure spectral-density leads are refused by the effective transmission."""
        left, right = _lorentzian_pair()
        setup = ScatterSetup(np.zeros((1, 1)), (Lead("L", left), Lead("R", right)))
        with pytest.raises(ValidationError):
            effective_transmission(setup, GRID)

    def test_gap_needs_matching_grids(self) -> None:
        """Ensure tables on different grids cannot be compared."""
        left, right = _lorentzian_pair()
        setup = ScatterSetup(np.zeros((1, 1)), (Lead("L", left), Lead("R", right)))
        first = true_transmission(setup, [0.0, 0.5])
        second = true_transmission(setup, [0.0, 0.6])
        with pytest.raises(ValidationError):
            transmission_gap(first, second)


# The End
