import os
from typing import Any, Dict, List, Literal, Optional, Union

import json5
import yaml
from pydantic import BaseModel, field_validator

CONFIG_ENV = "QSYM_CONFIG"


class QSymConfig(BaseModel):
    # Largest total grade enumerated by the verification suites
    max_grade: int = 6
    # Values of ν for the supercharacter and K(ν) suites
    nus: List[int] = [2, 3]
    # Number of oracle variables; None means |α| + |β| per product
    oracle_vars: Optional[int] = None
    output: Literal["text", "json"] = "text"
    seed: int = 0
    # Random class functions per ν in the randomized suites
    cases: int = 200
    workers: int = 4

    @field_validator("max_grade")
    def nonnegative_grade(cls, v):
        if v < 0:
            raise ValueError("max_grade must be >= 0")
        return v

    @field_validator("nus", mode="before")
    def normalize_nus(cls, v):
        """
        Accept a single ν or a list; duplicates are dropped, first occurrence kept.
        """
        if isinstance(v, int):
            v = [v]
        if not isinstance(v, list) or not v:
            raise ValueError("'nus' must be an integer or a nonempty list of integers")
        seen = []
        for nu in v:
            if not isinstance(nu, int) or nu < 2:
                raise ValueError(f"every ν must be an integer >= 2, got {nu!r}")
            if nu not in seen:
                seen.append(nu)
        return seen

    @field_validator("oracle_vars")
    def positive_vars(cls, v):
        if v is not None and v < 1:
            raise ValueError("oracle_vars must be >= 1")
        return v

    @field_validator("workers", "cases")
    def positive(cls, v):
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    def merge(self, runtime_args: Optional[Dict[str, Any]] = None) -> "QSymConfig":
        """
        Layer command-line values over this configuration.
        Keys with a None value are ignored, so unset flags keep the file's values.
        """
        runtime_args = runtime_args or {}
        data = self.model_dump()
        for key, value in runtime_args.items():
            if key in data and value is not None:
                data[key] = value
        return QSymConfig(data)

    def __init__(self, config_source: Union[str, Dict[str, Any], None] = None, **kwargs):
        """
        The constructor accepts a JSON/JSON5/YAML file path, a dictionary, or None.
        With None, the path in $QSYM_CONFIG is used when set.
        """
        if config_source is None and not kwargs:
            config_source = os.environ.get(CONFIG_ENV) or None
        if isinstance(config_source, str):
            with open(config_source, "r", encoding="utf-8") as f:
                text = f.read()
            if config_source.endswith((".yaml", ".yml")):
                data = yaml.safe_load(text) or {}
            else:
                data = json5.loads(text)
            if not isinstance(data, dict):
                raise ValueError(f"{config_source} must hold a mapping")
        elif isinstance(config_source, dict):
            data = dict(config_source)
        elif config_source is None:
            data = {}
        else:
            raise ValueError("config_source must be a file path or a dictionary")

        data.update(kwargs)
        super().__init__(**data)
