#!/usr/bin/env python3
"""
Error types shared by the terrace-window analysis modules.

The command-line front end maps ConfigError to exit code 2 and every other
TerraceModelError to exit code 3.
"""


class TerraceModelError(Exception):
    """Base class for domain errors raised by the analysis library."""


class WindowError(TerraceModelError):
    """A coordinate lies outside the window it must belong to."""


class GeometryError(TerraceModelError):
    """Empty section, point outside the triacontahedron, or bad shift."""


class PatternError(TerraceModelError):
    """Invalid tile string or a pattern that does not occur."""


class ConfigError(TerraceModelError):
    """Invalid run configuration or golden-field expression."""
