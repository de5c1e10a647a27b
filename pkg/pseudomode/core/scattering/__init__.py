# -*- coding: utf-8 -*-
"""
__init__

Transmission functions for true and pseudomode descriptions of leads.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .level_shift import level_shift, pseudomode_self_energy, self_energy, spectral_density_at
from .setup import Lead, ResidualTable, ScatterSetup, TransmissionTable, transmission_gap
from .transmission import (
    GreenBlocks,
    ResolvedCouplings,
    effective_transmission,
    extended_green_blocks,
    extended_matrix,
    extended_transmission,
    resolved_couplings,
    true_transmission,
)

__all__ = [
    "level_shift",
    "pseudomode_self_energy",
    "self_energy",
    "spectral_density_at",
    "Lead",
    "ResidualTable",
    "ScatterSetup",
    "TransmissionTable",
    "transmission_gap",
    "GreenBlocks",
    "ResolvedCouplings",
    "effective_transmission",
    "extended_green_blocks",
    "extended_matrix",
    "extended_transmission",
    "resolved_couplings",
    "true_transmission",
]

# The End
