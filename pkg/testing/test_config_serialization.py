#!/usr/bin/env python3
"""
Tests for numerics configuration, data models and file formats
"""
import json

import numpy as np
import pytest
from pydantic import ValidationError

from framewigner.composite import CompositeWignerTable
from framewigner.config import ConfigManager, config_manager, resolve
from framewigner.errors import InputError
from framewigner.frames import standard_frame
from framewigner.models import (
    CommandConfig,
    ConvergenceRecord,
    FrameKind,
    FrameSpec,
    MatrixDocument,
    WignerDocument,
)
from framewigner.opframes import WignerTable
from framewigner.serialization import (
    read_frame_json,
    read_matrix_json,
    read_wigner_csv,
    write_composite_csv,
    write_frame_json,
    write_matrix_json,
    write_rows_csv,
    write_wigner_csv,
)


def test_config_defaults_without_file(tmp_path):
    manager = ConfigManager(tmp_path / "missing.json")
    numerics = manager.get_numerics()
    assert numerics.tight_tol == 1e-10
    assert numerics.gaussian_cutoff == 1e-17
    assert len(numerics.table1_m_values) == 18


def test_config_file_overrides(tmp_path):
    path = tmp_path / "framewigner.json"
    path.write_text(json.dumps({"numerics": {"tight_tol": 1e-8, "noise_trials": 50}}))
    numerics = ConfigManager(path).get_numerics()
    assert numerics.tight_tol == 1e-8
    assert numerics.noise_trials == 50
    assert numerics.hermitian_tol == 1e-10


def test_config_update_and_save(tmp_path):
    path = tmp_path / "framewigner.json"
    manager = ConfigManager(path)
    manager.update_numerics(seed=11)
    manager.save()
    assert ConfigManager(path).get_numerics().seed == 11


def test_config_environment_variable(tmp_path, monkeypatch):
    path = tmp_path / "custom.json"
    path.write_text(json.dumps({"numerics": {"psd_tol": 1e-6}}))
    monkeypatch.setenv("FRAMEWIGNER_CONFIG", str(path))
    assert ConfigManager().get_numerics().psd_tol == 1e-6


def test_resolve_prefers_explicit_value():
    assert resolve(0.5, "tight_tol") == 0.5
    assert resolve(None, "tight_tol") == 1e-10
    config_manager.update_numerics(tight_tol=1e-6)
    assert resolve(None, "tight_tol") == 1e-6


def test_frame_spec_parse():
    spec = FrameSpec.parse("polygon:30")
    assert spec.kind == FrameKind.POLYGON and spec.param == 30
    assert str(spec) == "polygon:30"
    spec = FrameSpec.parse("Icosahedron")
    assert spec.kind == FrameKind.ICOSAHEDRON and spec.param is None
    with pytest.raises(ValidationError):
        FrameSpec.parse("dodecahedron")


def test_command_config_validation():
    config = CommandConfig(command="tomo")
    assert config.epsilon == 0.01 and config.trials == 2000
    with pytest.raises(ValidationError):
        CommandConfig(command="tomo", epsilon=0)
    with pytest.raises(ValidationError):
        CommandConfig(command="tomo", trials=0)
    with pytest.raises(ValidationError):
        CommandConfig(command="wigner", format="png")


def test_model_consistency_checks():
    with pytest.raises(ValidationError):
        ConvergenceRecord(m_values=[3, 4], N_values=[0.1], C_values=[0.2, 0.3], N_limit=0.1,
                          C_limit=0.3, N_spread=0, C_spread=0, limit_spread=0)
    with pytest.raises(ValidationError):
        MatrixDocument(rows=2, cols=2, entries=[[[0, 0], [1, 0]]])
    with pytest.raises(ValidationError):
        WignerDocument(count=2, values=[[0.0, 1.0], [1.0]])


def test_frame_json(tmp_path):
    path = tmp_path / "tetrahedron.json"
    frame = standard_frame("tetrahedron")
    write_frame_json(frame, path)
    restored = read_frame_json(path)
    assert restored.name == "tetrahedron"
    assert np.array_equal(restored.vectors, frame.vectors)


def test_matrix_json_keeps_complex_entries(tmp_path):
    path = tmp_path / "rho.json"
    rho = np.array([[1, 1j], [-1j, 2]]) / 3
    write_matrix_json(rho, path)
    assert np.array_equal(read_matrix_json(path), rho)


def test_readers_reject_bad_files(tmp_path):
    with pytest.raises(InputError):
        read_matrix_json(tmp_path / "absent.json")

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(InputError):
        read_frame_json(broken)

    mismatched = tmp_path / "mismatched.json"
    mismatched.write_text(json.dumps({"d": 2, "vectors": [[[1, 0]]]}))
    with pytest.raises(InputError):
        read_frame_json(mismatched)


def test_wigner_csv_format(tmp_path):
    path = tmp_path / "table.csv"
    write_wigner_csv(WignerTable(np.array([[0.1, -0.2], [1 / 3, 0.0]])), path)
    lines = path.read_text().splitlines()
    assert lines[0] == "j,k,value"
    assert lines[1:] == ["0,0,0.10000000000000001", "0,1,-0.20000000000000001",
                         "1,0,0.33333333333333331", "1,1,0"]


def test_wigner_csv_reader_rejects_incomplete_grid(tmp_path):
    path = tmp_path / "table.csv"
    path.write_text("j,k,value\n0,0,1\n0,1,0\n1,0,0\n")
    with pytest.raises(InputError):
        read_wigner_csv(path)
    path.write_text("a,b\n1,2\n")
    with pytest.raises(InputError):
        read_wigner_csv(path)


@pytest.mark.parametrize("body", [
    "0,0,1\n0,1,2\n1,0,3\n-1,1,4\n",
    "0,0,1\n0,1,2\n1,0,3\n1,2,4\n",
    "0,0,1\n0,1,2\n1,0,3\nx,1,4\n",
])
def test_wigner_csv_reader_rejects_bad_indices(tmp_path, body):
    path = tmp_path / "table.csv"
    path.write_text("j,k,value\n" + body)
    with pytest.raises(InputError):
        read_wigner_csv(path)


def test_composite_csv(tmp_path):
    path = tmp_path / "composite.csv"
    write_composite_csv(CompositeWignerTable(np.arange(16, dtype=float).reshape(2, 2, 2, 2)), path)
    lines = path.read_text().splitlines()
    assert lines[0] == "j,l,k,m,value"
    assert len(lines) == 17
    assert lines[-1] == "1,1,1,1,15"


def test_rows_csv(tmp_path):
    path = tmp_path / "rows.csv"
    write_rows_csv([{"kappa": 0.5, "m": 3, "lambda1": 0.25, "lambda2": 0.75}],
                   ("kappa", "m", "lambda1", "lambda2"), path)
    assert path.read_text() == "kappa,m,lambda1,lambda2\n0.5,3,0.25,0.75\n"
