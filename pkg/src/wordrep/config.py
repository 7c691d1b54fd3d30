"""Run configuration: CLI flags > WORDREP_* environment variables > JSON file > defaults."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Mapping

from .search import SearchBudget

ENV_PREFIX = "WORDREP_"


@dataclass(frozen=True)
class RunConfig:
    t_max: int = 3
    m_max: int | None = None
    node_limit: int | None = 10**8
    workers: int = 1
    seed: int = 0
    output: str | None = None
    summary: str | None = None
    strict: bool = True
    timings: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be positive")
        self.budget  # validates the budget fields

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(self.t_max, self.m_max, self.node_limit)

    def to_dict(self) -> dict:
        return asdict(self)


_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(name: str, value):
    if value is None or not isinstance(value, str):
        return value
    kind = _TYPES[name]
    if value.lower() in ("none", "") and "None" in kind:
        return None
    if kind.startswith("int"):
        return int(value)
    if kind == "bool":
        if value.lower() in ("1", "true", "yes", "on"):
            return True
        if value.lower() in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"{name}: not a boolean: {value!r}")
    return value


def _pick(source: Mapping) -> dict:
    out = {}
    for k, v in source.items():
        if k not in _TYPES:
            raise ValueError(f"unknown config key {k!r}")
        out[k] = _coerce(k, v)
    return out


def load_config(
    cli: Mapping | None = None,
    env: Mapping[str, str] | None = None,
    path: str | Path | None = None,
) -> RunConfig:
    """Merge the layers; `cli` holds only flags the user actually gave."""
    env = os.environ if env is None else env
    merged: dict = {}
    if path is not None:
        merged.update(_pick(json.loads(Path(path).read_text())))
    # other WORDREP_* variables (CONFIG, data paths) are not run settings
    from_env = {k[len(ENV_PREFIX) :].lower(): v for k, v in env.items() if k.startswith(ENV_PREFIX)}
    merged.update(_pick({k: v for k, v in from_env.items() if k in _TYPES}))
    merged.update(_pick({k: v for k, v in (cli or {}).items() if v is not None}))
    return replace(RunConfig(), **merged)


def config_path(cli_path: str | None, env: Mapping[str, str] | None = None) -> str | None:
    env = os.environ if env is None else env
    return cli_path or env.get(ENV_PREFIX + "CONFIG")
