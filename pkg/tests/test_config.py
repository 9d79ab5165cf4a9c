import json

import pytest
from pydantic import ValidationError

from qsymflow.schemas import QSymConfig


def test_defaults(monkeypatch):
    monkeypatch.delenv("QSYM_CONFIG", raising=False)
    config = QSymConfig()
    assert config.max_grade == 6 and config.nus == [2, 3]
    assert config.oracle_vars is None and config.output == "text" and config.seed == 0


def test_nus_normalization():
    assert QSymConfig({"nus": 5}).nus == [5]
    assert QSymConfig({"nus": [3, 2, 3]}).nus == [3, 2]


@pytest.mark.parametrize("data", [{"max_grade": -1}, {"nus": [1]}, {"nus": []}, {"workers": 0}, {"output": "xml"}, {"oracle_vars": 0}])
def test_invalid_values(data):
    with pytest.raises(ValidationError):
        QSymConfig(data)


def test_yaml_and_json5_files(tmp_path):
    yaml_file = tmp_path / "run.yaml"
    yaml_file.write_text("max_grade: 4\nnus: [2, 5]\n")
    assert QSymConfig(str(yaml_file)).nus == [2, 5]
    json5_file = tmp_path / "run.json5"
    json5_file.write_text("{max_grade: 3, // comment\n seed: 9,}")
    config = QSymConfig(str(json5_file))
    assert config.max_grade == 3 and config.seed == 9


def test_environment_default(tmp_path, monkeypatch):
    path = tmp_path / "env.json"
    path.write_text(json.dumps({"seed": 42}))
    monkeypatch.setenv("QSYM_CONFIG", str(path))
    assert QSymConfig().seed == 42


def test_merge_ignores_unset_flags():
    config = QSymConfig({"max_grade": 4, "seed": 1}).merge({"max_grade": None, "seed": 3, "unknown": 1})
    assert config.max_grade == 4 and config.seed == 3
