# -*- coding: utf-8 -*-
"""
__init__

Command-line utilities package.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

# The End
