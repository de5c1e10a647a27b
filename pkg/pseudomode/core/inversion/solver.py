# -*- coding: utf-8 -*-
"""
solver

Exact inversion of single-site exponential fits into pseudomode parameters.

Given amplitudes ``κ_k`` and exponents ``λ_k`` the kernel is realised by
``ζ̃ = S u`` and ``W̃ = S M S⁻¹`` with ``M = diag(λ)`` whenever the positive
matrix ``P = S†S`` solves ``P u = v`` with ``v_k = (κ_k / u_k)*``.  A final
unitary rotation makes ``-(W + W†)`` diagonal.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..bath.fits import ExpFit
from ..bath.parameters import PseudomodeBath
from ..configuration.conf import PseudomodeSettings, resolve_settings
from ..exceptions import InfeasibleInversionError, ValidationError
from ..forward.terms import decompose_terms
from .choices import InversionChoices


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InversionDiagnostics:
    min_rate: float
    kappa_error: float
    exponent_error: float
    physical: bool


@dataclass(frozen=True, eq=False)
class InversionResult:
    """Pseudomode bath realising a fit, with the square root ``S`` used to build it."""

    bath: PseudomodeBath
    s: np.ndarray
    gram: np.ndarray
    choices: InversionChoices
    diagnostics: InversionDiagnostics


def _checked_fit(fit: ExpFit) -> tuple[np.ndarray, np.ndarray]:
    if fit.dim != 1:
        raise ValidationError("Inversion handles single-site fits only")
    if np.any(fit.powers != 0):
        raise ValidationError("Inversion needs pure exponentials (all powers zero)")
    if np.any(fit.rates <= 0.0):
        raise ValidationError("Inversion needs decaying terms (all γ > 0)")
    kappa = fit.scalar_amplitudes()
    total = kappa.sum()
    if abs(total.imag) > 1e-10 * max(float(np.abs(kappa).sum()), 1e-300):
        raise InfeasibleInversionError(
            f"Σκ = {total:.6g} is not real", inequality="Σκ real"
        )
    if total.real <= 0.0:
        raise InfeasibleInversionError(
            f"Σκ = {total.real:.6g} is not positive", inequality="Σκ > 0"
        )
    return kappa, fit.exponents


def _orthonormal_basis(v: np.ndarray, u: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Return ``E`` with columns ``e₁ ∥ v``, ``e₂`` from ``u`` and completion, plus ``u₁, u₂``."""
    n = v.size
    first = v / np.linalg.norm(v)
    u1 = complex(np.vdot(first, u))
    remainder = u - first * u1
    u2 = float(np.linalg.norm(remainder))
    vectors = [first]
    if u2 > 1e-12 * np.linalg.norm(u):
        vectors.append(remainder / u2)
    else:
        u2 = 0.0
    for k in range(n):
        if len(vectors) == n:
            break
        candidate = np.zeros(n, dtype=complex)
        candidate[k] = 1.0
        for _ in range(2):
            for vector in vectors:
                candidate = candidate - vector * np.vdot(vector, candidate)
        norm = np.linalg.norm(candidate)
        if norm > 1e-8:
            vectors.append(candidate / norm)
    return np.column_stack(vectors), u1.real, u2


def _lower_block(
    choices: InversionChoices, n: int, u1: float, u2: float, norm_v: float, norm_u: float
) -> np.ndarray:
    """Return ``Y = [[A22, cross†], [cross, B]]`` after checking its inequalities."""
    if choices.a22 is not None:
        a22 = float(choices.a22)
    elif choices.a12 is not None:
        a12 = complex(choices.a12)
        if abs(a12.imag) > 1e-12 * max(abs(a12), 1.0):
            raise InfeasibleInversionError(f"A12 = {a12:.6g} must be real", inequality="A12 real")
        if u2 == 0.0:
            if a12 != 0:
                raise InfeasibleInversionError(
                    "u and v are collinear, so A12 must vanish", inequality="A12 = 0"
                )
            a22 = norm_v * u1 / norm_u**2
        else:
            a22 = -a12.real * u1 / u2
    else:
        a22 = norm_v * u1 / norm_u**2
    if not a22 > 0.0:
        raise InfeasibleInversionError(f"A22 = {a22:.6g} is not positive", inequality="A22 > 0")
    b = choices.block(n)
    if b.size:
        if np.linalg.norm(b - b.conj().T) > 1e-12 * max(np.linalg.norm(b), 1.0):
            raise ValidationError("B must be Hermitian")
        if np.linalg.eigvalsh(b).min() <= 0.0:
            raise InfeasibleInversionError("B is not positive definite", inequality="B ≻ 0")
    cross = choices.coupling(n)
    lower = np.zeros((n - 1, n - 1), dtype=complex)
    lower[0, 0] = a22
    lower[1:, 0] = cross
    lower[0, 1:] = cross.conj()
    lower[1:, 1:] = b
    if cross.size and np.any(cross != 0) and np.linalg.eigvalsh(lower).min() <= 0.0:
        raise InfeasibleInversionError(
            "The lower block is not positive definite", inequality="A22 > cross† B⁻¹ cross"
        )
    return lower


def gram_matrix(
    fit: ExpFit,
    choices: InversionChoices | None = None,
) -> tuple[np.ndarray, InversionChoices]:
    """Return ``S†S`` solving ``S†S u = v`` together with the resolved choices."""
    choices = choices or InversionChoices()
    kappa, _ = _checked_fit(fit)
    n = kappa.size
    u = choices.vector(n)
    v = np.conj(kappa / u)
    if n == 1:
        return np.array([[kappa.sum().real / abs(u[0]) ** 2]], dtype=complex), InversionChoices(u=u)
    if choices.a_prime is not None:
        if n != 2 or not np.allclose(u, 1.0):
            raise ValidationError("a_prime applies to two-mode fits with u = (1, 1)")
        a = float(choices.a_prime)
        alpha = kappa.real
        beta = kappa[0].imag
        gram = np.array(
            [[alpha[0] + a, -1j * beta - a], [1j * beta - a, alpha[1] + a]], dtype=complex
        )
        return gram, choices
    basis, u1, u2 = _orthonormal_basis(v, u)
    norm_v = float(np.linalg.norm(v))
    lower = _lower_block(choices, n, u1, u2, norm_v, float(np.linalg.norm(u)))
    first = -lower[:, 0] * u2 / u1
    corner = (norm_v + lower[0, 0].real * u2**2 / u1) / u1
    local = np.zeros((n, n), dtype=complex)
    local[0, 0] = corner
    local[1:, 0] = first
    local[0, 1:] = first.conj()
    local[1:, 1:] = lower
    gram = basis @ local @ basis.conj().T
    resolved = InversionChoices(
        u=u, a22=float(lower[0, 0].real), b=lower[1:, 1:], cross=lower[1:, 0]
    )
    return 0.5 * (gram + gram.conj().T), resolved


def choices_from_gram(fit: ExpFit, gram: np.ndarray, u: np.ndarray) -> InversionChoices:
    """Return the choices that reproduce a given ``S†S`` with ``S†S u = v``."""
    kappa, _ = _checked_fit(fit)
    u = np.asarray(u, dtype=complex)
    v = np.conj(kappa / u)
    if kappa.size == 1:
        return InversionChoices(u=u)
    basis, _, _ = _orthonormal_basis(v, u)
    local = basis.conj().T @ np.asarray(gram, dtype=complex) @ basis
    lower = local[1:, 1:]
    return InversionChoices(
        u=u, a22=float(lower[0, 0].real), b=lower[1:, 1:], cross=lower[1:, 0]
    )


def _match_terms(fit: ExpFit, bath: PseudomodeBath, settings: PseudomodeSettings) -> tuple[float, float]:
    """Return relative amplitude and exponent errors of the bath's terms against ``fit``."""
    decomposition = decompose_terms(bath, settings=settings)
    if len(decomposition) != len(fit) or np.any(decomposition.powers != 0):
        return float("inf"), float("inf")
    target = fit.exponents
    found = decomposition.exponents
    rows, cols = linear_sum_assignment(np.abs(target[:, None] - found[None, :]))
    kappa = fit.scalar_amplitudes()
    recovered = decomposition.scalar_amplitudes()
    kappa_error = np.max(np.abs(recovered[cols] - kappa[rows])) / np.max(np.abs(kappa))
    exponent_error = np.max(np.abs(found[cols] - target[rows])) / np.max(np.abs(target))
    return float(kappa_error), float(exponent_error)


def invert(
    fit: ExpFit,
    choices: InversionChoices | None = None,
    *,
    settings: PseudomodeSettings | None = None,
) -> InversionResult:
    """Construct ``(Λ, Γ, ζ)`` whose effective kernel equals the fit.

    The residual rates may come out negative; the result reports it in its
    diagnostics instead of raising.
    """
    config = resolve_settings(settings)
    kappa, exponents = _checked_fit(fit)
    gram, resolved = gram_matrix(fit, choices)
    values, vectors = np.linalg.eigh(gram)
    if values.min() <= config.sqrt_floor * max(values.max(), 0.0):
        raise InfeasibleInversionError(
            f"S†S is not positive definite (smallest eigenvalue {values.min():.3e})",
            inequality="S†S ≻ 0",
        )
    root = np.sqrt(values)
    s = (vectors * root) @ vectors.conj().T
    s_inv = (vectors / root) @ vectors.conj().T
    u = resolved.vector(kappa.size)
    generator = s @ np.diag(exponents) @ s_inv
    couplings = s @ u
    rates_matrix = -(generator + generator.conj().T)
    _, rotation = np.linalg.eigh(0.5 * (rates_matrix + rates_matrix.conj().T))
    unitary = rotation.conj().T
    bath = PseudomodeBath.from_w(
        unitary @ generator @ unitary.conj().T, unitary @ couplings, settings=config
    )
    kappa_error, exponent_error = _match_terms(fit, bath, config)
    diagnostics = InversionDiagnostics(
        min_rate=float(bath.rates.min()),
        kappa_error=kappa_error,
        exponent_error=exponent_error,
        physical=bath.physical,
    )
    logger.debug(
        "Fit inverted",
        extra={
            "modes": bath.n,
            "min_rate": diagnostics.min_rate,
            "kappa_error": kappa_error,
            "condition": float(values.max() / values.min()),
        },
    )
    return InversionResult(bath=bath, s=s, gram=gram, choices=resolved, diagnostics=diagnostics)


__all__ = [
    "InversionDiagnostics",
    "InversionResult",
    "gram_matrix",
    "choices_from_gram",
    "invert",
]


# The End
