# -*- coding: utf-8 -*-
"""
__init__

Numerical core: bath models, forward maps, fitting, inversion, tilings and scattering.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

# The End
