# -*- coding: utf-8 -*-
"""
configuration

Configuration helpers for the pseudomode core.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

from .conf import (
    ENV_PREFIX,
    PseudomodeSettings,
    SettingsManager,
    configure,
    current_settings,
    reset_settings,
    resolve_settings,
)

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
