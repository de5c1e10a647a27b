# -*- coding: utf-8 -*-
"""
__init__

Exponential fitting of sampled memory kernels.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .prony import PronyWorkspace, prony_fit, prony_workspace
from .takagi import takagi
from .window import (
    CandidateEvaluation,
    WindowCandidate,
    WindowSearchResult,
    default_candidates,
    default_window,
    optimize_window,
    scoring_grid,
    spectral_distance,
)

__all__ = [
    "PronyWorkspace",
    "prony_fit",
    "prony_workspace",
    "takagi",
    "CandidateEvaluation",
    "WindowCandidate",
    "WindowSearchResult",
    "default_candidates",
    "default_window",
    "optimize_window",
    "scoring_grid",
    "spectral_distance",
]

# The End
