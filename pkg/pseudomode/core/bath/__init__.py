# -*- coding: utf-8 -*-
"""
__init__

Bath descriptions: spectral densities, occupations, pseudomode parameters and kernels.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .fermi import FermiSpec
from .fits import ExpFit, ExpTerm, KernelSample
from .kernels import (
    correlation_pair,
    kernel_fourier_transform,
    kernel_symmetry_extend,
    memory_kernel,
    memory_kernel_series,
)
from .parameters import PseudomodeBath
from .spectral import (
    FlatWindow,
    LorentzianSum,
    LorentzianTerm,
    SemiElliptical,
    SpectralModel,
    SpectralModelSpec,
    Tabulated,
)

__all__ = [
    "FermiSpec",
    "ExpFit",
    "ExpTerm",
    "KernelSample",
    "correlation_pair",
    "kernel_fourier_transform",
    "kernel_symmetry_extend",
    "memory_kernel",
    "memory_kernel_series",
    "PseudomodeBath",
    "FlatWindow",
    "LorentzianSum",
    "LorentzianTerm",
    "SemiElliptical",
    "SpectralModel",
    "SpectralModelSpec",
    "Tabulated",
]

# The End
