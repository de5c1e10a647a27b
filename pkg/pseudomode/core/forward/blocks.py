# -*- coding: utf-8 -*-
"""
blocks

Defective pseudomode building blocks and their closed-form spectral densities.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import math

import numpy as np

from ..bath.parameters import PseudomodeBath
from ..exceptions import ValidationError


# coupling inside the three-mode chain that makes one eigenvalue double
ND3_COUPLING = math.sqrt((5.0 * math.sqrt(5.0) - 11.0) / 2.0)


def _require_nonzero(delta: float) -> None:
    if delta == 0:
        raise ValidationError("The block coupling δ must be non-zero")


def nd2_block(
    epsilon: float,
    delta: float,
    eta: float,
    zeta1: complex,
    zeta2: complex,
) -> PseudomodeBath:
    """Return the two-mode chain with ``Λ = [[ε, δ], [δ, ε]]`` and ``Γ = (2η, 2η + 4δ)``.

    Its generator has a single eigenvalue ``-iε - η - δ`` with one
    eigenvector.  Negative ``δ`` or ``η`` yields an unphysical bath.
    """
    _require_nonzero(delta)
    lam = np.array([[epsilon, delta], [delta, epsilon]], dtype=float)
    rates = np.array([2.0 * eta, 2.0 * eta + 4.0 * delta])
    return PseudomodeBath(lam=lam, rates=rates, zeta=np.array([zeta1, zeta2], dtype=complex))


def nd2_closed_form(
    epsilon: float,
    delta: float,
    eta: float,
    zeta1: complex,
    zeta2: complex,
    omega: np.ndarray | float,
) -> np.ndarray:
    """Return ``J_eff`` of :func:`nd2_block` as Lorentzian plus two squared-Lorentzian terms."""
    x = np.asarray(omega, dtype=float) - epsilon
    g = delta + eta
    denominator = x * x + g * g
    weight = abs(zeta1) ** 2 + abs(zeta2) ** 2
    cross = 2.0 * (zeta1 * np.conj(zeta2)).real
    imbalance = abs(zeta1) ** 2 - abs(zeta2) ** 2
    return (
        weight * 2.0 * g / denominator
        + cross * 4.0 * delta * g * x / denominator**2
        + imbalance * 2.0 * delta * (g * g - x * x) / denominator**2
    )


def nd3_block(epsilon: float, eta: float, delta: float, zeta: complex) -> PseudomodeBath:
    """Return the three-mode chain whose generator has a double eigenvalue with one eigenvector."""
    _require_nonzero(delta)
    x = ND3_COUPLING
    hopping = np.array([[0.0, x, 0.0], [x, 0.0, 1.0], [0.0, 1.0, 0.0]])
    lam = epsilon * np.eye(3) + delta * hopping
    rates = np.array([2.0 * eta, 2.0 * eta, 2.0 * eta + 4.0 * delta])
    return PseudomodeBath(lam=lam, rates=rates, zeta=np.array([zeta, 0.0, 0.0], dtype=complex))


def nd3_closed_form(
    epsilon: float, delta: float, zeta: complex, omega: np.ndarray | float
) -> np.ndarray:
    """Return ``J_eff`` of :func:`nd3_block` for ``η = 0``."""
    x = np.asarray(omega, dtype=float) - epsilon
    root5 = math.sqrt(5.0)
    numerator = 8.0 * (5.0 * root5 - 11.0) * delta**5 * abs(zeta) ** 2
    first = (7.0 - 3.0 * root5) * delta**2 + 2.0 * x * x
    second = 2.0 * (3.0 - root5) * delta**2 + x * x
    return numerator / (first**2 * second)


def nd2_perturbed_block(
    delta: float, epsilon: float, zeta1: float, zeta2: float
) -> PseudomodeBath:
    """Return the diagonalizable two-mode chain that tends to a defective one as ``ϵ → 0``.

    Its eigenvalues are ``-δ ± iδ sqrt(ϵ(ϵ + 2))``.
    """
    _require_nonzero(delta)
    hopping = delta * (1.0 + epsilon)
    lam = np.array([[0.0, hopping], [hopping, 0.0]])
    rates = np.array([0.0, 4.0 * delta])
    return PseudomodeBath(lam=lam, rates=rates, zeta=np.array([zeta1, zeta2], dtype=complex))


def nd2_perturbed_closed_form(
    delta: float,
    epsilon: float,
    zeta1: float,
    zeta2: float,
    omega: np.ndarray | float,
) -> np.ndarray:
    """Return ``J_eff`` of :func:`nd2_perturbed_block` for real couplings."""
    if np.iscomplexobj(zeta1) or np.iscomplexobj(zeta2):
        raise ValidationError("The perturbed closed form assumes real couplings")
    w = np.asarray(omega, dtype=float)
    stretch = 1.0 + epsilon
    numerator = 4.0 * delta * (delta * zeta1 * stretch + zeta2 * w) ** 2
    denominator = (
        delta**4 * stretch**4
        - 2.0 * delta**2 * w * w * (epsilon * (epsilon + 2.0) - 1.0)
        + w**4
    )
    return numerator / denominator


__all__ = [
    "ND3_COUPLING",
    "nd2_block",
    "nd2_closed_form",
    "nd3_block",
    "nd3_closed_form",
    "nd2_perturbed_block",
    "nd2_perturbed_closed_form",
]


# The End
