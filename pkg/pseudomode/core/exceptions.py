# -*- coding: utf-8 -*-
"""
exceptions

Custom domain exceptions for the pseudomode core.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

from typing import Any


class PseudomodeError(Exception):
    """Base class for pseudomode-specific exceptions carrying an exit code."""

    exit_code: int = 4

    def __init__(self, detail: str | None = None) -> None:
        super().__init__(detail or "")
        self.detail = detail


# --- Configuration errors (exit code 2) -------------------------------------

class ConfigurationError(PseudomodeError):
    """Raised when a job document or a settings override is invalid."""

    exit_code = 2


class ValidationError(ConfigurationError):
    """Raised when library inputs break a documented precondition."""


# --- Infeasible inversions (exit code 3) ------------------------------------

class InfeasibleInversionError(PseudomodeError):
    """Raised when a fit cannot be inverted with the requested choices."""

    exit_code = 3

    def __init__(self, detail: str | None = None, *, inequality: str | None = None) -> None:
        super().__init__(detail)
        self.inequality = inequality


class PositivitySearchError(InfeasibleInversionError):
    """Raised when the positivity search exhausts its budget with Γ < 0."""

    def __init__(self, detail: str | None = None, *, report: Any = None) -> None:
        super().__init__(detail, inequality="min Γ >= 0")
        self.report = report


# --- Numerical failures (exit code 4) ---------------------------------------

class NumericalError(PseudomodeError):
    """Base class for numerical failures."""

    exit_code = 4


class QuadratureError(NumericalError):
    """Raised when adaptive quadrature misses the requested accuracy."""

    def __init__(self, detail: str | None = None, *, estimate: float | None = None) -> None:
        super().__init__(detail)
        self.estimate = estimate


class SingularResolventError(NumericalError):
    """Raised when a resolvent is singular at a frequency."""

    def __init__(self, detail: str | None = None, *, omega: float | None = None) -> None:
        super().__init__(detail)
        self.omega = omega


class ClassificationError(NumericalError):
    """Raised when the eigen-solver fails while classifying ``W``."""


class IntegrationError(NumericalError):
    """Raised when the ODE integrator reports failure."""


class TakagiError(NumericalError):
    """Raised when a Takagi factorization is requested for a non-symmetric matrix."""


class PronyError(NumericalError):
    """Base class for Prony fitting failures."""


class InsufficientRootsError(PronyError):
    """Raised when fewer than ``L`` polynomial roots lie inside the unit disk."""

    def __init__(self, detail: str | None = None, *, count: int = 0) -> None:
        super().__init__(detail)
        self.count = count


class RankDeficientError(PronyError):
    """Raised when the amplitude least-squares system is rank deficient."""


class WindowSearchError(PronyError):
    """Raised when every sampling window candidate is rejected."""

    def __init__(self, detail: str | None = None, *, reasons: list[str] | None = None) -> None:
        super().__init__(detail)
        self.reasons = list(reasons or [])


class FactorizationError(NumericalError):
    """Raised when a tiling node cannot be factored into real couplings."""

    def __init__(self, detail: str | None = None, *, epsilon: float | None = None) -> None:
        super().__init__(detail)
        self.epsilon = epsilon


__all__ = [
    "PseudomodeError",
    "ConfigurationError",
    "ValidationError",
    "InfeasibleInversionError",
    "PositivitySearchError",
    "NumericalError",
    "QuadratureError",
    "SingularResolventError",
    "ClassificationError",
    "IntegrationError",
    "TakagiError",
    "PronyError",
    "InsufficientRootsError",
    "RankDeficientError",
    "WindowSearchError",
    "FactorizationError",
]


# The End
