# -*- coding: utf-8 -*-
"""
__init__

Reading and writing of documents and tables.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from .documents import (
    BathDocument,
    ChoicesDocument,
    FitDocument,
    InversionDocument,
    dump_document,
    load_document,
    load_model,
    model_from_data,
    model_to_data,
    pack,
    unpack,
)
from .tables import (
    NUMBER_FORMAT,
    TableWriter,
    format_cell,
    read_tabulated_csv,
    spectral_columns,
    spectral_rows,
)

__all__ = [
    "BathDocument",
    "ChoicesDocument",
    "FitDocument",
    "InversionDocument",
    "dump_document",
    "load_document",
    "load_model",
    "model_from_data",
    "model_to_data",
    "pack",
    "unpack",
    "NUMBER_FORMAT",
    "TableWriter",
    "format_cell",
    "read_tabulated_csv",
    "spectral_columns",
    "spectral_rows",
]

# The End
