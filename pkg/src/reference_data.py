#!/usr/bin/env python3
"""
Reference constants loaded from reference_values.yaml.

The YAML file carries the physical basis length, experimental terrace data
and the printed constants that reports compare with. When the file is
missing the built-in defaults below are used.
"""

import copy
import logging
from typing import Any, Dict, Optional, Tuple

import yaml

from src.errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_REFERENCE_FILE = "reference_values.yaml"

DEFAULTS: Dict[str, Any] = {
    "lengths": {
        "b5_angstrom": 4.56,
        "b2_angstrom": 4.78,
        "first_shift_angstrom": 7.78,
    },
    "experimental": {
        "terrace_spacing_short": {"value": 4.22, "uncertainty": 0.26},
        "terrace_spacing_long": {"value": 6.78, "uncertainty": 0.24},
        "hole_density": 4.2e-3,
    },
    "printed": {
        "F0": 2.3511,
        "eta_max": 0.7236,
        "F_min": 0.7265,
        "relative_density_min": 0.3090,
        "pentagon_vertex_ratio": 3.6180,
        "D0": 12.6e-3,
        "t_eq": 9.5,
        "spacing_short": 4.08,
        "spacing_long": 6.60,
        "bergman_face_density_row16": 6.8e-3,
        "angle_axis_2": 58.3,
        "angle_axis_2_prime": 31.7,
    },
}


class ReferenceData:
    """Access to reference lengths, measurements and printed constants."""

    def __init__(self, config_file: Optional[str] = DEFAULT_REFERENCE_FILE):
        """
        Args:
            config_file: Path to the YAML file; None uses the defaults only

        Raises:
            ConfigError: If the file exists but cannot be parsed
        """
        self.config_file = config_file
        self.config = self._load_config()
        self.lengths = self.config.get("lengths", {})
        self.experimental = self.config.get("experimental", {})
        self.printed = self.config.get("printed", {})

    def _load_config(self) -> Dict[str, Any]:
        """Load the YAML file over a copy of the defaults."""
        config = copy.deepcopy(DEFAULTS)
        if self.config_file is None:
            return config
        try:
            with open(self.config_file, "r", encoding="utf-8") as file:
                loaded = yaml.safe_load(file) or {}
        except FileNotFoundError:
            logger.debug(
                f"Reference file not found: {self.config_file}; using defaults"
            )
            return config
        except yaml.YAMLError as e:
            raise ConfigError(f"Error parsing YAML reference file: {e}")
        if not isinstance(loaded, dict):
            raise ConfigError(
                f"Reference file {self.config_file} must hold a mapping"
            )
        for section, values in loaded.items():
            current = config.get(section)
            if isinstance(values, dict) and isinstance(current, dict):
                config[section].update(values)
            else:
                config[section] = values
        logger.debug(f"Loaded reference values from {self.config_file}")
        return config

    @property
    def b5_angstrom(self) -> float:
        return float(self.lengths["b5_angstrom"])

    def experimental_band(self, name: str) -> Tuple[float, float]:
        """
        (value, uncertainty) of an experimental spacing.

        Raises:
            KeyError: If the measurement is not listed
        """
        entry = self.experimental[name]
        return float(entry["value"]), float(entry["uncertainty"])

    @property
    def hole_density(self) -> float:
        return float(self.experimental["hole_density"])

    def printed_value(self, name: str) -> float:
        if name not in self.printed:
            raise KeyError(f"Printed constant '{name}' not found")
        return float(self.printed[name])
