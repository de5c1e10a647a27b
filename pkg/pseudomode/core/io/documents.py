# -*- coding: utf-8 -*-
"""
documents

JSON documents for spectral models, pseudomode baths, fits and inversion reports.

Complex arrays are stored as nested lists whose innermost entries are
``[re, im]`` pairs.

Version:0.1.0
Author: Timur Kady
Email: timurkady@yandex.com
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, TypeVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field as PField, TypeAdapter
from pydantic import ValidationError as SchemaError

from ..bath.fits import ExpFit, ExpTerm
from ..bath.parameters import PseudomodeBath
from ..bath.spectral import SpectralModel, SpectralModelSpec
from ..exceptions import ValidationError
from ..inversion.choices import InversionChoices
from ..inversion.solver import InversionResult


logger = logging.getLogger(__name__)

D = TypeVar("D", bound=BaseModel)

_MODEL_ADAPTER: TypeAdapter = TypeAdapter(SpectralModelSpec)


def pack(value: Any) -> Any:
    """Return ``value`` as nested lists of ``[re, im]`` pairs."""
    if value is None:
        return None
    array = np.asarray(value, dtype=complex)
    return np.stack([array.real, array.imag], axis=-1).tolist()


def unpack(data: Any) -> np.ndarray:
    """Invert :func:`pack`."""
    array = np.asarray(data, dtype=float)
    if array.size == 0:
        return np.zeros(0, dtype=complex)
    if array.shape[-1:] != (2,):
        raise ValidationError("Complex data must end in [re, im] pairs")
    return array[..., 0] + 1j * array[..., 1]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class BathDocument(_Document):
    """Pseudomode parameters ``(Λ, Γ, ζ)``."""

    lam: list[Any]
    rates: list[float]
    zeta: list[Any]

    @classmethod
    def from_bath(cls, bath: PseudomodeBath) -> "BathDocument":
        return cls(lam=pack(bath.lam), rates=bath.rates.tolist(), zeta=pack(bath.zeta))

    def to_bath(self) -> PseudomodeBath:
        return PseudomodeBath(lam=unpack(self.lam), rates=np.asarray(self.rates), zeta=unpack(self.zeta))


class TermDocument(_Document):
    amplitude: list[Any]
    energy: float
    rate: float
    power: int = PField(0, ge=0)


class FitDocument(_Document):
    """Exponential fit with its residual and warnings."""

    terms: list[TermDocument] = PField(min_length=1)
    residual: float | None = None
    warnings: list[str] = PField(default_factory=list)

    @classmethod
    def from_fit(cls, fit: ExpFit) -> "FitDocument":
        return cls(
            terms=[
                TermDocument(
                    amplitude=pack(term.amplitude),
                    energy=term.energy,
                    rate=term.rate,
                    power=term.power,
                )
                for term in fit.terms
            ],
            residual=fit.residual,
            warnings=list(fit.warnings),
        )

    def to_fit(self) -> ExpFit:
        terms = tuple(
            ExpTerm(unpack(item.amplitude), item.energy, item.rate, item.power) for item in self.terms
        )
        return ExpFit(terms=terms, residual=self.residual, warnings=tuple(self.warnings))


class ChoicesDocument(_Document):
    u: list[Any] | None = None
    a12: list[float] | None = None
    a22: float | None = None
    b: list[Any] | None = None
    cross: list[Any] | None = None
    a_prime: float | None = None

    @classmethod
    def from_choices(cls, choices: InversionChoices) -> "ChoicesDocument":
        return cls(**choices.as_dict())

    def to_choices(self) -> InversionChoices:
        def load(value):
            return None if value is None else unpack(value)

        a12 = None if self.a12 is None else complex(self.a12[0], self.a12[1])
        return InversionChoices(
            u=load(self.u), a12=a12, a22=self.a22, b=load(self.b), cross=load(self.cross), a_prime=self.a_prime
        )


class DiagnosticsDocument(_Document):
    min_rate: float
    kappa_error: float | None
    exponent_error: float | None
    physical: bool


class InversionDocument(_Document):
    """Inversion outcome: the bath, ``S``, ``S†S``, the resolved choices and diagnostics."""

    bath: BathDocument
    s: list[Any]
    gram: list[Any]
    choices: ChoicesDocument
    diagnostics: DiagnosticsDocument

    @classmethod
    def from_result(cls, result: InversionResult) -> "InversionDocument":
        diagnostics = result.diagnostics
        return cls(
            bath=BathDocument.from_bath(result.bath),
            s=pack(result.s),
            gram=pack(result.gram),
            choices=ChoicesDocument.from_choices(result.choices),
            diagnostics=DiagnosticsDocument(
                min_rate=diagnostics.min_rate,
                kappa_error=_finite(diagnostics.kappa_error),
                exponent_error=_finite(diagnostics.exponent_error),
                physical=diagnostics.physical,
            ),
        )


def _finite(value: float) -> float | None:
    return float(value) if np.isfinite(value) else None


def model_from_data(data: dict[str, Any]) -> SpectralModel:
    """Validate a spectral-model mapping discriminated by ``kind``."""
    try:
        return _MODEL_ADAPTER.validate_python(data)
    except SchemaError as exc:
        raise ValidationError(f"Invalid spectral model: {exc}") from exc


def model_to_data(model: SpectralModel) -> dict[str, Any]:
    return model.model_dump(mode="json")


def load_document(path: Path, schema: type[D]) -> D:
    """Read and validate a JSON document."""
    source = Path(path)
    if not source.is_file():
        raise ValidationError(f"Document {source} does not exist")
    try:
        return schema.model_validate_json(source.read_text(encoding="utf-8"))
    except SchemaError as exc:
        raise ValidationError(f"Invalid {schema.__name__} in {source}: {exc}") from exc


def load_model(path: Path) -> SpectralModel:
    source = Path(path)
    if not source.is_file():
        raise ValidationError(f"Document {source} does not exist")
    try:
        data = json.loads(source.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{source} is not valid JSON: {exc}") from exc
    return model_from_data(data)


def dump_document(document: BaseModel | dict[str, Any], path: Path) -> Path:
    """Write a document as indented JSON and return the path."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(document, BaseModel):
        text = document.model_dump_json(indent=2)
    else:
        text = json.dumps(document, indent=2, sort_keys=True)
    target.write_text(text + "\n", encoding="utf-8")
    logger.debug("Document written", extra={"path": str(target)})
    return target


__all__ = [
    "pack",
    "unpack",
    "BathDocument",
    "TermDocument",
    "FitDocument",
    "ChoicesDocument",
    "DiagnosticsDocument",
    "InversionDocument",
    "model_from_data",
    "model_to_data",
    "load_document",
    "load_model",
    "dump_document",
]


# The End
