# -*- coding: utf-8 -*-
"""
__init__

Forward maps from pseudomode parameters to effective kernels and spectral densities.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .blocks import (
    ND3_COUPLING,
    nd2_block,
    nd2_closed_form,
    nd2_perturbed_block,
    nd2_perturbed_closed_form,
    nd3_block,
    nd3_closed_form,
)
from .classify import EigenCluster, WClass, WKind, classify_w
from .density import (
    effective_spectral_density,
    effective_spectral_density_grid,
    resolvent_sandwich,
)
from .kernel import (
    build_w,
    effective_kernel,
    effective_kernel_ode_oracle,
    effective_kernel_series,
    generator_kernel,
)
from .terms import (
    KernelTermDecomposition,
    TermContribution,
    decompose_terms,
    spectral_density_from_terms,
    term_contributions,
)

__all__ = [
    "ND3_COUPLING",
    "nd2_block",
    "nd2_closed_form",
    "nd2_perturbed_block",
    "nd2_perturbed_closed_form",
    "nd3_block",
    "nd3_closed_form",
    "EigenCluster",
    "WClass",
    "WKind",
    "classify_w",
    "effective_spectral_density",
    "effective_spectral_density_grid",
    "resolvent_sandwich",
    "build_w",
    "effective_kernel",
    "effective_kernel_ode_oracle",
    "effective_kernel_series",
    "generator_kernel",
    "KernelTermDecomposition",
    "TermContribution",
    "decompose_terms",
    "spectral_density_from_terms",
    "term_contributions",
]

# The End
