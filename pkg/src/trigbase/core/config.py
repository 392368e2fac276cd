"""Configuration loading for trigbase.

Settings come from a YAML file; missing keys fall back to DEFAULTS.
The OEIS cache directory can be overridden with TRIGBASE_OEIS_CACHE.
"""

import copy
import logging
import os
from dataclasses import dataclass
from importlib import resources
try:
    from importlib.resources.abc import Traversable
except ImportError:  # Python < 3.11
    from importlib.abc import Traversable
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

CACHE_ENV_VAR = "TRIGBASE_OEIS_CACHE"

USER_CONFIG_PATH = Path.home() / ".config" / "trigbase" / "config.yaml"
PACKAGE_CONFIG_PATH = resources.files("trigbase.data").joinpath("config.yaml")

DEFAULTS: Dict[str, Any] = {
    "general": {
        "order": 64,
        "max_n": 60,
        "format": "plain",
        "workers": 4,
    },
    "oeis": {
        "cache_dir": "~/.cache/trigbase/oeis",
        "offline": True,
        "base_url": "https://oeis.org",
        "timeout": 10,
    },
    "logging": {
        "level": "WARNING",
    },
}

FORMATS = ("plain", "csv", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class OeisSettings:
    cache_dir: Path
    offline: bool
    base_url: str
    timeout: float


@dataclass
class Settings:
    """Validated configuration."""

    order: int
    max_n: int
    format: str
    workers: int
    oeis: OeisSettings
    log_level: str

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Settings":
        general, oeis, log = data.get("general"), data.get("oeis"), data.get("logging")
        if not all(isinstance(section, dict) for section in (general, oeis, log)):
            raise ValueError("general, oeis and logging must be mappings")
        cache_dir = os.environ.get(CACHE_ENV_VAR) or oeis["cache_dir"]
        settings = cls(
            order=int(general["order"]),
            max_n=int(general["max_n"]),
            format=str(general["format"]),
            workers=int(general["workers"]),
            oeis=OeisSettings(
                cache_dir=Path(cache_dir).expanduser(),
                offline=bool(oeis["offline"]),
                base_url=str(oeis["base_url"]).rstrip("/"),
                timeout=float(oeis["timeout"]),
            ),
            log_level=str(log["level"]).upper(),
        )
        settings.validate()
        return settings

    def validate(self) -> None:
        """Raise ValueError on out-of-range settings."""
        if self.order < 1:
            raise ValueError(f"general.order must be >= 1, got {self.order}")
        if self.max_n < 1:
            raise ValueError(f"general.max_n must be >= 1, got {self.max_n}")
        if self.workers < 1:
            raise ValueError(f"general.workers must be >= 1, got {self.workers}")
        if self.format not in FORMATS:
            raise ValueError(f"general.format must be one of {FORMATS}, got {self.format!r}")
        if self.oeis.timeout <= 0:
            raise ValueError(f"oeis.timeout must be positive, got {self.oeis.timeout}")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"logging.level must be one of {LOG_LEVELS}, got {self.log_level!r}")


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _read_yaml(path: Path | Traversable) -> Dict[str, Any]:
    text = path.read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        raise ValueError(f"{path}: invalid YAML: {e}") from e
    if not isinstance(data, dict):
        raise ValueError(f"{path}: top level must be a mapping")
    return data


def load_config(path: Optional[Path] = None) -> Settings:
    """Load settings.

    Args:
        path: Explicit config file. If None, the user config is tried first,
            then the config shipped with the package.

    Raises:
        FileNotFoundError: if an explicit path does not exist
        ValueError: if the merged settings are invalid
    """
    if path is not None:
        data = _read_yaml(Path(path))
        logger.debug(f"Loaded config from {path}")
        return Settings.from_dict(_merge(DEFAULTS, data))

    for candidate in (USER_CONFIG_PATH, PACKAGE_CONFIG_PATH):
        if candidate.is_file():
            try:
                data = _read_yaml(candidate)
                logger.debug(f"Loaded config from {candidate}")
                return Settings.from_dict(_merge(DEFAULTS, data))
            except (OSError, ValueError) as e:
                logger.error(f"Error loading config from {candidate}: {e}")
    return Settings.from_dict(copy.deepcopy(DEFAULTS))
