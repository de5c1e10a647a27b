# -*- coding: utf-8 -*-
"""
__init__

Inversion of exponential fits into pseudomode parameters.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .choices import InversionChoices
from .feasibility import (
    TwoModeFeasibility,
    two_mode_feasibility,
    two_mode_fit,
    two_mode_rates,
    two_mode_symmetric_density,
)
from .search import SearchReport, SearchStrategy, positivity_search
from .solver import (
    InversionDiagnostics,
    InversionResult,
    choices_from_gram,
    gram_matrix,
    invert,
)

__all__ = [
    "InversionChoices",
    "TwoModeFeasibility",
    "two_mode_feasibility",
    "two_mode_fit",
    "two_mode_rates",
    "two_mode_symmetric_density",
    "SearchReport",
    "SearchStrategy",
    "positivity_search",
    "InversionDiagnostics",
    "InversionResult",
    "choices_from_gram",
    "gram_matrix",
    "invert",
]

# The End
