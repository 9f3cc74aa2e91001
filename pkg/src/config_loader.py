#!/usr/bin/env python3
"""
Configuration Loader

This module handles loading run configuration files. A run configuration is
a JSON object whose keys match the fields of RunConfig; command-line flags
override individual keys after the file is read.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, List, Optional, Tuple

from src.errors import ConfigError
from src.exporters import FORMATS
from src.golden import GoldenScalar, parse_golden
from src.icosa import ModuleVector6

logger = logging.getLogger(__name__)

DEFAULT_ETA0 = "-1/(tau*(tau+2))"


@dataclass(frozen=True)
class RunConfig:
    """Validated settings shared by every subcommand."""

    b5_angstrom: float = 4.56
    eta0: str = DEFAULT_ETA0
    horizon: int = 24
    format: str = "csv"
    precision: int = 4
    out: Optional[str] = None
    interior_only: bool = True
    grid_step: str = "1/100"

    def __post_init__(self):
        if isinstance(self.b5_angstrom, bool) or not isinstance(
            self.b5_angstrom, (int, float)
        ):
            raise ConfigError(
                f"b5_angstrom must be a number: {self.b5_angstrom!r}"
            )
        if self.b5_angstrom <= 0:
            raise ConfigError(
                f"b5_angstrom must be > 0, got {self.b5_angstrom}"
            )
        if not isinstance(self.horizon, int) or isinstance(self.horizon, bool):
            raise ConfigError(f"horizon must be an integer: {self.horizon!r}")
        if self.horizon < 0:
            raise ConfigError(f"horizon must be >= 0, got {self.horizon}")
        if self.format not in FORMATS:
            raise ConfigError(
                f"format must be one of {FORMATS}, got {self.format!r}"
            )
        precision = self.precision
        if not isinstance(precision, int) or not 1 <= precision <= 12:
            raise ConfigError(
                f"precision must be an integer in [1, 12], got {precision!r}"
            )
        parse_golden(str(self.eta0))
        if self.grid_step_value.sign() <= 0:
            raise ConfigError(f"grid_step must be > 0, got {self.grid_step!r}")

    @property
    def eta0_value(self) -> GoldenScalar:
        return parse_golden(str(self.eta0))

    @property
    def grid_step_value(self) -> GoldenScalar:
        return parse_golden(str(self.grid_step))


CONFIG_KEYS = tuple(f.name for f in fields(RunConfig))


class ConfigLoader:
    """Configuration loader for run settings."""

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize the configuration loader.

        Args:
            config_file: Path to a JSON run configuration, or None for defaults

        Raises:
            ConfigError: If the file is missing, malformed or has unknown keys
        """
        self.config_file = config_file
        self.config_data: Dict[str, Any] = {}
        if config_file is not None:
            self.load_config()

    def load_config(self) -> Dict[str, Any]:
        """
        Load configuration from the JSON file.

        Returns:
            The raw key/value pairs read from the file
        """
        if not os.path.exists(self.config_file):
            raise ConfigError(
                f"Configuration file not found: {self.config_file}"
            )
        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(
                f"Invalid JSON in configuration file {self.config_file}: {e}"
            )
        if not isinstance(data, dict):
            raise ConfigError(
                f"Configuration file {self.config_file} must hold an object"
            )
        self._validate_keys(data)
        self.config_data = data
        logger.info(f"Configuration loaded from: {self.config_file}")
        logger.debug(f"Configuration: {self.config_data}")
        return data

    def _validate_keys(self, data: Dict[str, Any]):
        unknown = sorted(set(data) - set(CONFIG_KEYS))
        if unknown:
            raise ConfigError(
                f"Unknown configuration keys {unknown}; expected a subset of"
                f" {list(CONFIG_KEYS)}"
            )

    def build(self, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """
        Merge file values with overrides (None values are ignored).

        Raises:
            ConfigError: If the merged settings are invalid
        """
        merged = dict(self.config_data)
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key] = value
        self._validate_keys(merged)
        try:
            config = RunConfig(**merged)
        except TypeError as e:
            raise ConfigError(f"Invalid configuration: {e}")
        return config

    def print_config_summary(self, config: RunConfig):
        """Log a summary of the effective configuration."""
        logger.info("=" * 50)
        logger.info("RUN CONFIGURATION SUMMARY")
        logger.info("=" * 50)
        logger.info(f"Configuration file: {self.config_file or '(defaults)'}")
        for key, value in asdict(config).items():
            logger.info(f"{key}: {value}")
        logger.info("=" * 50)


def load_run_config(
    config_file: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """
    Convenience function to load a run configuration.

    Raises:
        ConfigError: If loading or validation fails
    """
    return ConfigLoader(config_file).build(overrides)


def load_patterson_queries(path: str) -> List[Tuple[str, ModuleVector6]]:
    """
    Read labelled shift vectors, one per line: "label n1 n2 n3 n4 n5 n6".

    Blank lines and lines starting with # are skipped.

    Raises:
        ConfigError: If the file is missing or a line is malformed
    """
    if not os.path.exists(path):
        raise ConfigError(f"Query file not found: {path}")
    queries = []
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 7:
                raise ConfigError(
                    f"{path}:{number}: expected a label and 6 indices, got"
                    f" {len(parts)} fields"
                )
            try:
                indices = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise ConfigError(
                    f"{path}:{number}: indices must be integers: {text!r}"
                )
            queries.append((parts[0], ModuleVector6(indices)))
    logger.info(f"Loaded {len(queries)} shift vectors from {path}")
    return queries
