# -*- coding: utf-8 -*-
"""
reporting

Run reports listing written artifacts and key diagnostics.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, List

from ...core.io import TableWriter, dump_document


class RunReport:
    """Track artifacts, diagnostics and warnings of one CLI run."""

    def __init__(self, root: Path, command: str) -> None:
        """Initialize the report for output directory ``root``."""
        self.root = Path(root)
        self.command = command
        self._artifacts: List[Path] = []
        self._diagnostics: dict[str, Any] = {}
        self._warnings: List[str] = []
        self._tables = TableWriter()

    @property
    def artifacts(self) -> List[Path]:
        """Return the paths written so far."""
        return list(self._artifacts)

    @property
    def diagnostics(self) -> dict[str, Any]:
        return dict(self._diagnostics)

    @property
    def warnings(self) -> List[str]:
        return list(self._warnings)

    def add_artifact(self, path: Path) -> Path:
        self._artifacts.append(Path(path))
        return Path(path)

    def table(self, name: str, columns, rows) -> Path:
        """Write ``rows`` to ``root/name`` and record the artifact."""
        return self.add_artifact(self._tables.write(self.root / name, columns, rows))

    def document(self, name: str, document) -> Path:
        return self.add_artifact(dump_document(document, self.root / name))

    def record(self, key: str, value: Any) -> None:
        """Store one diagnostic value."""
        if isinstance(value, float) and not math.isfinite(value):
            value = None
        self._diagnostics[key] = value

    def warn(self, message: str) -> None:
        self._warnings.append(message)

    def summary_line(self) -> str:
        """Return ``command: key=value ...`` with floats in short form."""
        parts = []
        for key, value in self._diagnostics.items():
            if isinstance(value, float):
                parts.append(f"{key}={value:.6g}")
            elif isinstance(value, (int, str, bool)):
                parts.append(f"{key}={value}")
        return f"{self.command}: " + " ".join(parts) if parts else self.command

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "artifacts": [path.name for path in self._artifacts],
            "diagnostics": self._diagnostics,
            "warnings": self._warnings,
        }

    def write(self) -> Path:
        """Write ``report.json`` next to the artifacts."""
        target = self.root / "report.json"
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        return target


# The End
