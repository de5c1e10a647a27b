# -*- coding: utf-8 -*-
"""
cli

Module entry point for ``python -m pseudomode.cli``.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .utils.cli import PseudomodeCLI, cli

__all__ = ["PseudomodeCLI", "cli"]

if __name__ == "__main__":
    cli()


# The End
