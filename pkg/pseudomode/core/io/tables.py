# -*- coding: utf-8 -*-
"""
tables

CSV tables with a header row and locale-independent number formatting.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import csv
import io
import logging
import re
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from ..bath.spectral import Tabulated
from ..exceptions import ValidationError


logger = logging.getLogger(__name__)

NUMBER_FORMAT = ".16e"

_ELEMENT = re.compile(r"^J_(?:(\d)(\d)|(\d+)_(\d+))$")


def format_cell(value: Any) -> str:
    """Render one cell; floats use 17 significant digits in scientific notation."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), NUMBER_FORMAT)
    return str(value)


class TableWriter:
    """Write rows under a header to CSV."""

    suffix = ".csv"

    def render(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        self._emit(buffer, columns, rows)
        return buffer.getvalue()

    def write(self, path: Path, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        """Write the table to ``path`` and return it."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", newline="", encoding="utf-8") as handle:
            count = self._emit(handle, columns, rows)
        logger.debug("Table written", extra={"path": str(target), "rows": count})
        return target

    def _emit(self, handle, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> int:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        count = 0
        for row in rows:
            if len(row) != len(columns):
                raise ValidationError(
                    f"Row has {len(row)} cells but the table has {len(columns)} columns"
                )
            writer.writerow([format_cell(value) for value in row])
            count += 1
        return count


def spectral_columns(dim: int) -> tuple[str, ...]:
    """Return ``omega`` followed by ``J_ij`` for every element."""
    if dim < 10:
        names = [f"J_{i + 1}{j + 1}" for i in range(dim) for j in range(dim)]
    else:
        names = [f"J_{i + 1}_{j + 1}" for i in range(dim) for j in range(dim)]
    return ("omega", *names)


def spectral_rows(omegas: np.ndarray, values: np.ndarray) -> Iterable[tuple[float, ...]]:
    """Yield ``(ω, J_11, J_12, ...)`` rows from a ``(m, n, n)`` stack of real parts."""
    flat = np.real(values).reshape(len(omegas), -1)
    for omega, row in zip(omegas, flat):
        yield (float(omega), *map(float, row))


def read_tabulated_csv(path: Path) -> Tabulated:
    """Read a tabulated spectral density with header ``omega,J_11,...``.

    Missing off-diagonal columns are filled from their transpose; a column
    missing in both orientations is zero.
    """
    source = Path(path)
    if not source.is_file():
        raise ValidationError(f"Spectral density table {source} does not exist")
    with source.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = [name.strip() for name in next(reader)]
        except StopIteration as exc:
            raise ValidationError(f"{source} is empty") from exc
        rows = [row for row in reader if row]
    if not header or header[0] != "omega":
        raise ValidationError(f"{source} must start with an 'omega' column")
    elements: dict[tuple[int, int], int] = {}
    for position, name in enumerate(header[1:], start=1):
        match = _ELEMENT.match(name)
        if match is None:
            raise ValidationError(f"Unrecognised column '{name}' in {source}")
        first, second = (match.group(1), match.group(2)) if match.group(1) else match.group(3, 4)
        elements[(int(first) - 1, int(second) - 1)] = position
    if not elements:
        raise ValidationError(f"{source} holds no J columns")
    dim = max(max(pair) for pair in elements) + 1
    try:
        data = np.array([[float(cell) for cell in row] for row in rows], dtype=float)
    except ValueError as exc:
        raise ValidationError(f"{source} contains a non-numeric cell") from exc
    if data.ndim != 2 or data.shape[1] != len(header):
        raise ValidationError(f"{source} has ragged rows")
    values = np.zeros((data.shape[0], dim, dim))
    for (i, j), position in elements.items():
        values[:, i, j] = data[:, position]
        if (j, i) not in elements:
            values[:, j, i] = data[:, position]
    logger.debug("Tabulated density read", extra={"path": str(source), "points": data.shape[0], "dim": dim})
    return Tabulated(grid=data[:, 0].tolist(), values=values.tolist())


__all__ = [
    "NUMBER_FORMAT",
    "TableWriter",
    "format_cell",
    "read_tabulated_csv",
    "spectral_columns",
    "spectral_rows",
]


# The End
