# -*- coding: utf-8 -*-
"""
conf

Runtime configuration utilities for the pseudomode package.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from threading import RLock
from typing import Any, Mapping

from ..exceptions import ConfigurationError


# shared with the CLI defaults
ENV_PREFIX = "PSEUDOMODE_"


@dataclass(frozen=True)
class PseudomodeSettings:
    """Container for numerical tolerances derived from environment variables."""

    hermiticity_tol: float = 1e-12
    quadrature_tol: float = 1e-8
    quadrature_limit: int = 400
    diagonalizability_cond: float = 1e8
    eigen_path_cond: float = 1e6
    jordan_rank_tol: float = 1e-10
    cluster_tol: float = 1e-5
    takagi_symmetry_tol: float = 1e-12
    unit_circle_tol: float = 1e-8
    ode_rtol: float = 1e-10
    ode_atol: float = 1e-12
    sqrt_floor: float = 1e-12
    singular_shift: float = 1e-9
    interior_widths: float = 5.0
    threads: int = 1

    def __post_init__(self) -> None:
        """Reject tolerances that cannot drive the numerical routines."""
        for item in fields(self):
            value = getattr(self, item.name)
            if value is None or value <= 0:
                raise ConfigurationError(
                    f"Setting '{item.name}' must be positive, got {value!r}"
                )
        if self.diagonalizability_cond < self.eigen_path_cond:
            raise ConfigurationError(
                "diagonalizability_cond must not be smaller than eigen_path_cond"
            )

    @property
    def classify_tol(self) -> float:
        """Return the classification tolerance ``1 / diagonalizability_cond``."""
        return 1.0 / self.diagonalizability_cond

    @classmethod
    def from_env(
        cls,
        env: Mapping[str, str] | None = None,
        *,
        prefix: str = ENV_PREFIX,
    ) -> "PseudomodeSettings":
        """Build a settings instance from environment variables."""
        source = os.environ if env is None else env
        data = {key[len(prefix) :]: value for key, value in source.items() if key.startswith(prefix)}
        defaults = cls()
        values: dict[str, Any] = {}
        for item in fields(cls):
            raw = data.get(item.name.upper())
            default = getattr(defaults, item.name)
            if isinstance(default, int) and not isinstance(default, bool):
                values[item.name] = cls._to_int(raw, default=default)
            else:
                values[item.name] = cls._to_float(raw, default=default)
        return cls(**values)

    def with_overrides(self, overrides: Mapping[str, Any] | None) -> "PseudomodeSettings":
        """Return a copy with the named tolerances replaced."""
        if not overrides:
            return self
        known = {item.name for item in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ConfigurationError(f"Unknown tolerance override(s): {', '.join(unknown)}")
        return replace(self, **dict(overrides))

    @staticmethod
    def _to_int(value: str | None, *, default: int) -> int:
        """Return an integer from ``value`` or ``default`` when conversion fails."""
        if value is None:
            return default
        try:
            return int(value)
        except (TypeError, ValueError):
            return default

    @staticmethod
    def _to_float(value: str | None, *, default: float) -> float:
        """Return a float from ``value`` or ``default`` when conversion fails."""
        if value is None:
            return default
        try:
            return float(value)
        except (TypeError, ValueError):
            return default


class SettingsManager:
    """Central storage for the active ``PseudomodeSettings`` instance."""

    def __init__(self, initial: PseudomodeSettings | None = None) -> None:
        """Prepare storage with an optional preconfigured ``initial`` settings."""

        self._lock = RLock()
        self._settings = initial

    def configure(self, settings: PseudomodeSettings) -> None:
        """Install a new settings instance."""
        with self._lock:
            self._settings = settings

    def current(self) -> PseudomodeSettings:
        """Return the active settings, lazily initializing from the environment."""
        with self._lock:
            if self._settings is None:
                self._settings = PseudomodeSettings.from_env()
            return self._settings

    def reset(self) -> None:
        """Drop the active settings so the next lookup re-reads the environment."""
        with self._lock:
            self._settings = None


_settings_manager = SettingsManager()


def configure(settings: PseudomodeSettings) -> None:
    """Public entry point to install process-wide tolerances."""
    _settings_manager.configure(settings)


def current_settings() -> PseudomodeSettings:
    """Return the active settings instance used by pseudomode components."""
    return _settings_manager.current()


def reset_settings() -> None:
    """Forget configured settings; the environment is consulted again lazily."""
    _settings_manager.reset()


def resolve_settings(settings: PseudomodeSettings | None) -> PseudomodeSettings:
    """Return ``settings`` or the active process-wide settings."""
    return settings if settings is not None else current_settings()


__all__ = [
    "ENV_PREFIX",
    "PseudomodeSettings",
    "SettingsManager",
    "configure",
    "current_settings",
    "reset_settings",
    "resolve_settings",
]


# The End
