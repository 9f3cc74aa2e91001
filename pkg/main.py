#!/usr/bin/env python3
"""
Main Entry Point for the terrace-plane analysis

Reproduces plane sequences perpendicular to a 5fold axis of the icosahedral
tiling, their section areas and densities, and planar Patterson functions.

Usage:
    python main.py <subcommand> [options]

    Subcommands: table, density, search, spacing, section, patterson,
    surface, constants, extra, figures. Run with -h for details.
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
