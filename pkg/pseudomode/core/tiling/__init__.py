# -*- coding: utf-8 -*-
"""
__init__

Many-mode tilings and their nonconvergence factors.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .constructions import (
    TilingSpec,
    TilingVariant,
    diagonal_tiling,
    nd_tiling,
    tiling_spectral_density,
)
from .factors import DEFAULT_SERIES_TERMS, eta1, eta1_series, eta2, eta2_series
from .profile import PROFILE_COLUMNS, TilingProfile, predicted_factor, tiling_error_profile

__all__ = [
    "TilingSpec",
    "TilingVariant",
    "diagonal_tiling",
    "nd_tiling",
    "tiling_spectral_density",
    "DEFAULT_SERIES_TERMS",
    "eta1",
    "eta1_series",
    "eta2",
    "eta2_series",
    "PROFILE_COLUMNS",
    "TilingProfile",
    "predicted_factor",
    "tiling_error_profile",
]

# The End
