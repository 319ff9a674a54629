"""Settings shared by every ``qhc`` command, with optional YAML defaults."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

import yaml

from qhc.poly.scalar import DEFAULT_TOL, Field, Mode
from qhc.resolution.export import ExportFormat

QHC_CONFIG_ENV = "QHC_CONFIG"


class ConfigError(ValueError):
    """Raised when a config file or option value is invalid."""


@dataclass(frozen=True)
class CliConfig:
    """Arithmetic mode, float tolerance, reduction flag and output format."""

    mode: Mode = Mode.EXACT
    tol: float = DEFAULT_TOL
    reduce: bool = False
    format: ExportFormat = ExportFormat.TEXT

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "mode", Mode(self.mode))
        except ValueError:
            raise ConfigError(f"mode must be exact or float, got {self.mode!r}") from None
        try:
            object.__setattr__(self, "format", ExportFormat(self.format))
        except ValueError:
            raise ConfigError(f"format must be text, dot or json, got {self.format!r}") from None
        if isinstance(self.tol, bool) or not isinstance(self.tol, (int, float)):
            raise ConfigError(f"tol must be a number, got {self.tol!r}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        object.__setattr__(self, "tol", float(self.tol))
        if not isinstance(self.reduce, bool):
            raise ConfigError(f"reduce must be true or false, got {self.reduce!r}")

    @property
    def field(self) -> Field:
        """Coefficient field; the tolerance only matters in float mode."""
        if self.mode is Mode.EXACT:
            return Field()
        return Field(Mode.FLOAT, self.tol)

    def merged(self, **overrides: Any) -> CliConfig:
        """Copy with every override that is not ``None`` applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(path: Path | None) -> CliConfig:
    """Read a YAML mapping holding any subset of the :class:`CliConfig` fields.

    Raises:
        ConfigError: If the file is unreadable, not a mapping, or has bad keys or values.
    """
    if path is None:
        return CliConfig()
    try:
        data = yaml.safe_load(path.read_text())
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    if data is None:
        return CliConfig()
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a mapping")
    known = {f.name for f in fields(CliConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys in {path}: {', '.join(map(str, unknown))}")
    return CliConfig(**data)
