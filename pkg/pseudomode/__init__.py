"""
__init__

Pseudomode toolkit entry point.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .core.bath import ExpFit, PseudomodeBath, SemiElliptical, SpectralModel
from .core.configuration.conf import PseudomodeSettings, configure, current_settings
from .core.exceptions import PseudomodeError
from .meta import __version__

# The End
