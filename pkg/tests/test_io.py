# -*- coding: utf-8 -*-
"""Tests covering JSON documents and CSV tables."""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

import numpy as np
import pytest

from pseudomode.core.bath import ExpFit, FlatWindow, LorentzianSum, SemiElliptical, Tabulated
from pseudomode.core.exceptions import ValidationError
from pseudomode.core.inversion import InversionChoices, invert
from pseudomode.core.io import (
    BathDocument,
    ChoicesDocument,
    FitDocument,
    InversionDocument,
    TableWriter,
    dump_document,
    format_cell,
    load_document,
    load_model,
    model_from_data,
    model_to_data,
    pack,
    read_tabulated_csv,
    spectral_columns,
    spectral_rows,
    unpack,
)


TWO_MODE_FIT = ExpFit.from_arrays([0.5, 0.3], [-0.2, 0.4], [0.6, 0.8])


def test_pack_layout() -> None:
    """Ensure complex entries become ``[re, im]`` pairs."""

    assert pack([1.0 + 2.0j, -0.5j]) == [[1.0, 2.0], [0.0, -0.5]]
    assert pack(None) is None
    with pytest.raises(ValidationError):
        unpack([1.0, 2.0, 3.0])


def test_empty_data_unpacks_to_an_empty_vector() -> None:
    """Ensure an empty list reads back as a zero-length complex array."""

    values = unpack([])
    assert values.shape == (0,)
    assert values.dtype == complex


def test_bath_document(baths, tmp_path: Path) -> None:
    """Ensure a bath written to disk is read back unchanged."""

    bath = baths.bath(3, dim=2)
    path = dump_document(BathDocument.from_bath(bath), tmp_path / "bath.json")
    restored = load_document(path, BathDocument).to_bath()
    np.testing.assert_allclose(restored.lam, bath.lam)
    np.testing.assert_allclose(restored.zeta, bath.zeta)
    np.testing.assert_allclose(restored.rates, bath.rates)


def test_fit_document_keeps_powers() -> None:
    """Ensure defective terms keep their polynomial power."""

    fit = ExpFit.from_arrays([1.0, 0.5j], [0.1, 0.1], [0.4, 0.4], powers=[0, 1], residual=1e-3)
    restored = FitDocument.model_validate_json(FitDocument.from_fit(fit).model_dump_json()).to_fit()
    assert tuple(restored.powers) == (0, 1)
    assert restored.residual == 1e-3
    np.testing.assert_allclose(restored.scalar_amplitudes(), fit.scalar_amplitudes())


def test_inversion_document() -> None:
    """Ensure the inversion report carries the resolved choices."""

    result = invert(TWO_MODE_FIT)
    document = InversionDocument.from_result(result)
    data = json.loads(document.model_dump_json())
    assert set(data) == {"bath", "s", "gram", "choices", "diagnostics"}
    assert isinstance(data["diagnostics"]["physical"], bool)
    choices = document.choices.to_choices()
    assert isinstance(choices, InversionChoices)
    np.testing.assert_allclose(choices.u, result.choices.u)


def test_two_mode_choices_rebuild_the_same_inversion() -> None:
    """Ensure written two-mode choices invert the fit to the same ``S†S``."""

    result = invert(TWO_MODE_FIT)
    data = json.loads(InversionDocument.from_result(result).model_dump_json())
    assert data["choices"]["b"] is None
    assert data["choices"]["cross"] is None
    choices = ChoicesDocument.model_validate(data["choices"]).to_choices()
    again = invert(TWO_MODE_FIT, choices)
    np.testing.assert_allclose(again.gram, result.gram, atol=1e-12)


def test_empty_blocks_are_accepted_as_choices() -> None:
    """Ensure explicit empty ``b`` and ``cross`` lists mean the two-mode defaults."""

    choices = ChoicesDocument(u=pack([1.0, 1.0]), b=[], cross=[]).to_choices()
    assert choices.block(2).shape == (0, 0)
    assert choices.coupling(2).shape == (0,)
    np.testing.assert_allclose(invert(TWO_MODE_FIT, choices).gram, invert(TWO_MODE_FIT).gram, atol=1e-12)


def test_undefined_errors_are_written_as_null() -> None:
    """Ensure a non-finite diagnostic is stored as ``null``, not as a number."""

    result = invert(TWO_MODE_FIT)
    broken = replace(result, diagnostics=replace(result.diagnostics, kappa_error=float("nan")))
    data = json.loads(InversionDocument.from_result(broken).model_dump_json())
    assert data["diagnostics"]["kappa_error"] is None
    assert data["diagnostics"]["exponent_error"] == pytest.approx(result.diagnostics.exponent_error)


def test_model_mapping() -> None:
    """Ensure models are selected by their ``kind`` field."""

    model = model_from_data({"kind": "flat-window", "gamma0": 0.5, "omega_min": -2.0, "omega_max": 2.0})
    assert isinstance(model, FlatWindow)
    assert model_from_data(model_to_data(model)) == model
    lorentzian = model_from_data(
        {"kind": "lorentzian-sum", "terms": [{"amplitude": 1.0, "center": 0.0, "width": 0.5}]}
    )
    assert isinstance(lorentzian, LorentzianSum)


def test_invalid_model() -> None:
    """Ensure schema failures surface as validation errors."""

    with pytest.raises(ValidationError):
        model_from_data({"kind": "gaussian"})
    with pytest.raises(ValidationError):
        model_from_data({"kind": "semi-elliptical", "halfwidth": -1.0})


def test_load_model(tmp_path: Path) -> None:
    """Ensure a model file is read and broken files are reported."""

    path = tmp_path / "model.json"
    path.write_text(json.dumps({"kind": "semi-elliptical", "halfwidth": 2.0}), encoding="utf-8")
    assert load_model(path) == SemiElliptical(halfwidth=2.0)
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_model(path)
    with pytest.raises(ValidationError):
        load_model(tmp_path / "missing.json")


def test_unknown_document_field(tmp_path: Path) -> None:
    """Ensure documents forbid extra keys."""

    path = tmp_path / "bath.json"
    path.write_text(json.dumps({"lam": [], "rates": [], "zeta": [], "extra": 1}), encoding="utf-8")
    with pytest.raises(ValidationError):
        load_document(path, BathDocument)


def test_cell_format() -> None:
    """Ensure floats keep 17 significant digits regardless of locale."""

    assert format_cell(0.1) == "1.0000000000000001e-01"
    assert format_cell(3) == "3"
    assert format_cell(np.True_) == "true"
    assert format_cell("L") == "L"


def test_spectral_columns() -> None:
    """Ensure element names switch to separated indices above nine sites."""

    assert spectral_columns(2) == ("omega", "J_11", "J_12", "J_21", "J_22")
    assert spectral_columns(10)[1] == "J_1_1"


def test_render() -> None:
    """Ensure the header row precedes the data."""

    text = TableWriter().render(("omega", "J_11"), [(0.0, 1.0)])
    assert text.splitlines() == ["omega,J_11", "0.0000000000000000e+00,1.0000000000000000e+00"]


def test_ragged_row() -> None:
    """Ensure rows must match the header."""

    with pytest.raises(ValidationError):
        TableWriter().render(("omega", "J_11"), [(0.0,)])


def test_tabulated_round_trip(tmp_path: Path) -> None:
    """Ensure a written density table reads back as a tabulated model."""

    grid = np.linspace(-1.0, 1.0, 9)
    model = SemiElliptical()
    values = model.evaluate_grid(grid)
    path = TableWriter().write(tmp_path / "j.csv", spectral_columns(1), spectral_rows(grid, values))
    table = read_tabulated_csv(path)
    assert isinstance(table, Tabulated)
    np.testing.assert_allclose(table.evaluate_grid(grid), values, atol=1e-12)


def test_missing_transpose_is_mirrored(tmp_path: Path) -> None:
    """Ensure ``J_21`` is filled from ``J_12`` when absent."""

    path = tmp_path / "j.csv"
    lines = ["omega,J_11,J_12,J_22"] + [f"{w},1.0,0.5,2.0" for w in (-1.0, -0.5, 0.5, 1.0)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    table = read_tabulated_csv(path)
    np.testing.assert_allclose(table.evaluate(0.0), [[1.0, 0.5], [0.5, 2.0]], atol=1e-12)


@pytest.mark.parametrize(
    "content",
    ["", "w,J_11\n0,1\n", "omega,X\n0,1\n", "omega,J_11\n0,abc\n"],
)
def test_malformed_tables(tmp_path: Path, content: str) -> None:
    """Ensure malformed tables are rejected."""

    path = tmp_path / "bad.csv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValidationError):
        read_tabulated_csv(path)


# The End
