"""Run configuration: defaults, then a JSON config file, then command-line flags."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Optional

from .saturation import RankConfig

CACHE_ENV = "SATSEQ_CACHE_DIR"
FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str = ""
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    certify: bool = False
    max_rows: int = 6000
    max_cols: int = 60000
    max_primes: int = 3
    guard_degrees: int = 2
    guard_max_rows: int = 2500
    time_budget: Optional[float] = None  # seconds per row / sub-computation
    cache_dir: Optional[str] = None
    no_cache: bool = False
    format: str = "json"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.max_rows < 1 or self.max_cols < 1:
            raise ConfigError("resource limits must be positive")
        if self.max_primes < 2:
            raise ConfigError("max_primes must be >= 2")

    def rank_config(self) -> RankConfig:
        return RankConfig(
            method="rational" if self.certify else "modular",
            seed=self.seed,
            max_primes=self.max_primes,
            max_rows=self.max_rows,
            max_cols=self.max_cols,
            guard_degrees=self.guard_degrees,
            guard_max_rows=self.guard_max_rows,
        )

    def resolved_cache_dir(self) -> Optional[Path]:
        if self.no_cache:
            return None
        if self.cache_dir:
            return Path(self.cache_dir)
        env = os.environ.get(CACHE_ENV)
        if env:
            return Path(env)
        return Path.home() / ".cache" / "satseq"

    def as_dict(self) -> dict:
        """What goes into reports: everything that can change a result."""
        out = asdict(self)
        for key in ("cache_dir", "no_cache", "format"):
            out.pop(key)
        return out


_FIELD_NAMES = {f.name for f in fields(RunConfig)}


def load_config_file(path: str | os.PathLike) -> Dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = set(data) - _FIELD_NAMES
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return data


def build_config(file_values: Dict[str, Any], flag_values: Dict[str, Any]) -> RunConfig:
    merged: Dict[str, Any] = dict(file_values)
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    try:
        return RunConfig(**merged)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
