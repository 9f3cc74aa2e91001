#!/usr/bin/env python3
"""
Command-line front end.

Each subcommand builds a pandas DataFrame (or a polygon) from the library
modules and writes it as CSV, a padded text table, or SVG. Logging goes to
stderr so that stdout carries only the product.

Exit codes: 0 success, 2 usage or configuration error, 3 domain error.
"""

import argparse
import logging
import math
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import pandas as pd

from src import density, exporters, fibonacci, icosa, patterson, terraces
from src.config_loader import (
    ConfigLoader,
    RunConfig,
    load_patterson_queries,
)
from src.errors import ConfigError, PatternError, TerraceModelError
from src.golden import TAU_FLOAT, GoldenScalar, parse_golden, to_float
from src.icosa import ModuleVector6
from src.reference_data import DEFAULT_REFERENCE_FILE, ReferenceData

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

DEFAULT_QUERY_FILE = os.path.join("config", "patterson_shifts.txt")
DEFAULT_FIGURE_DIR = "figures"
PATTERSON_ROW = 16

_LOG_CONFIGURED = False

logger = logging.getLogger(__name__)


def setup_logging(
    level: int = logging.INFO, log_file: Optional[str] = None
) -> logging.Logger:
    """Setup logging configuration."""
    global _LOG_CONFIGURED
    if _LOG_CONFIGURED:
        logging.getLogger().setLevel(level)
        return logger

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(
            logging.FileHandler(
                log_file, mode="w", encoding="utf-8", errors="replace"
            )
        )
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )
    _LOG_CONFIGURED = True
    return logger


def parse_eta(text: str) -> GoldenScalar:
    """
    Plane height from a golden expression ("tau/(tau+2)") or a decimal.

    Raises:
        ConfigError: If the text is neither
    """
    try:
        return parse_golden(text)
    except ConfigError:
        pass
    try:
        return GoldenScalar(Fraction(text.strip()), 0)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"cannot read eta value {text!r}")


def _emit(frame: pd.DataFrame, config: RunConfig):
    if config.format == exporters.SVG:
        raise ConfigError(
            "svg output is produced by the section and figures commands"
        )
    exporters.write_frame(frame, config.out, config.precision, config.format)


def _records(config: RunConfig, count: Optional[int] = None):
    return terraces.plane_sequence(
        config.eta0_value, config.horizon if count is None else count
    )


# Subcommands


def cmd_table(config: RunConfig, args) -> int:
    """Table of eta1, eta2, eta3 and their section areas."""
    records = _records(config)
    frame = terraces.table_frame(records)
    if getattr(args, "occupancy", False):
        flags = {
            model: terraces.occupancy(records, model)
            for model in terraces.MODELS
        }
        frame["tile"] = [r.tile_to_next or "" for r in records]
        frame["terrace"] = [
            "" if r.terrace is None else str(r.terrace) for r in records
        ]
        frame["face_i"] = [f.bergman_top_face for f in flags["i"]]
        frame["vertex_ii"] = [f.vertex_points for f in flags["ii"]]
        frame["vertex_iii"] = [f.vertex_points for f in flags["iii"]]
    logger.info(f"Table of {len(frame)} planes")
    _emit(frame, config)
    return EXIT_OK


def density_grid(
    lo: GoldenScalar, hi: GoldenScalar, step: GoldenScalar
) -> List[GoldenScalar]:
    """lo, lo + step, ... up to hi, plus every breakpoint inside [lo, hi]."""
    if (hi - lo).sign() < 0:
        raise ConfigError("eta range is empty")
    count = math.floor(to_float((hi - lo) / step) + 1e-9)
    points = {lo + k * step for k in range(count + 1)}
    points = {p for p in points if (p - hi).sign() <= 0}
    for b in density.BREAKPOINTS:
        for candidate in (b, -b):
            if (candidate - lo).sign() >= 0 and (candidate - hi).sign() <= 0:
                points.add(candidate)
    return sorted(points)


def _density_marker(eta: GoldenScalar) -> str:
    magnitude = abs(eta)
    if magnitude == density.ETA_MAX_FIBONACCI:
        return "fibonacci_limit"
    if magnitude in (density.BREAKPOINT_1, density.BREAKPOINT_2):
        return "breakpoint"
    return ""


def cmd_density(config: RunConfig, args) -> int:
    """Section area and densities on an eta grid."""
    lo = parse_eta(args.eta_min)
    hi = parse_eta(args.eta_max)
    rows = []
    for eta in density_grid(lo, hi, config.grid_step_value):
        area = density.F(eta)
        rows.append(
            {
                "eta": to_float(eta),
                "F": area.value,
                "D_relative": density.D_relative(eta),
                "D_absolute": density.D_absolute(
                    eta, args.kind, config.b5_angstrom
                ).value,
                "marker": _density_marker(eta),
            }
        )
    F_min = density.F(density.ETA_MAX_FIBONACCI).value
    logger.info(
        f"Markers: lowest F = {F_min:.4f} at |eta| ="
        f" {to_float(density.ETA_MAX_FIBONACCI):.4f}"
    )
    _emit(pd.DataFrame(rows), config)
    return EXIT_OK


def cmd_search(config: RunConfig, args) -> int:
    """Occurrences of a tile pattern along the coding line."""
    y0 = terraces.y_of_eta(config.eta0_value)
    occurrences = fibonacci.locate_string(
        y0, args.pattern, config.horizon, interior_only=config.interior_only
    )
    if not occurrences:
        raise PatternError(
            f"pattern {args.pattern} not found within {config.horizon} tiles"
        )
    logger.info(f"first match N={occurrences[0].start}")
    frame = pd.DataFrame(
        [
            {
                "start": o.start,
                "stop": o.stop,
                "interior": o.is_interior,
                "shift_up_eta": to_float(fibonacci.ETA_PER_Y * o.margin_up),
                "shift_down_eta": to_float(
                    fibonacci.ETA_PER_Y * o.margin_down
                ),
            }
            for o in occurrences
        ]
    )
    _emit(frame, config)
    return EXIT_OK


def cmd_spacing(config: RunConfig, args) -> int:
    """Plane spacings in A over a run of planes (default: the terraces)."""
    last = args.start + args.count - 1
    records = _records(config, max(config.horizon, last))
    window = records[args.start : last + 1]
    sequence = terraces.spacing_in_angstrom(window, config.b5_angstrom)
    frame = pd.DataFrame(
        [
            {
                "from_N": lower.N,
                "to_N": upper.N,
                "from_terrace": terraces.terrace_number(lower.N),
                "to_terrace": terraces.terrace_number(upper.N),
                "tile": tile,
                "spacing_angstrom": spacing,
            }
            for lower, upper, tile, spacing in zip(
                window, window[1:], sequence.tiles, sequence.spacings
            )
        ],
        columns=[
            "from_N",
            "to_N",
            "from_terrace",
            "to_terrace",
            "tile",
            "spacing_angstrom",
        ],
    ).astype({"from_terrace": "Int64", "to_terrace": "Int64"})
    logger.info(
        f"Tiles {sequence.tiles}: total {sequence.total:.2f} A over"
        f" {len(sequence)} spacings"
    )
    _emit(frame, config)
    return EXIT_OK


def cmd_section(config: RunConfig, args) -> int:
    """Vertices of the triacontahedron section at height eta."""
    eta = parse_eta(args.eta)
    section = icosa.triacontahedron().section(eta)
    vertices = (
        section.to_angstrom(config.b5_angstrom)
        if args.angstrom
        else section.vertices
    )
    logger.info(
        f"Section at eta={to_float(eta):.4f}: {section.vertex_count} vertices,"
        f" area {section.area:.6f}"
    )
    if config.format == exporters.SVG:
        exporters.write_polygon_svg(vertices, config.out, f"eta={args.eta}")
        return EXIT_OK
    _emit(exporters.polygon_frame(vertices), config)
    return EXIT_OK


def _patterson_etas(config: RunConfig, row: int) -> Dict[str, GoldenScalar]:
    if row < 0:
        raise ConfigError(f"row must be >= 0, got {row}")
    record = _records(config, max(config.horizon, row))[row]
    return {
        "P(eta1)": record.eta1,
        "P(eta2)": record.eta2,
        "P(eta3)": record.eta3,
    }


def _queries(path: Optional[str]):
    if path is None and not os.path.exists(DEFAULT_QUERY_FILE):
        logger.warning(
            f"{DEFAULT_QUERY_FILE} not found; reporting the zero shift only"
        )
        return []
    return load_patterson_queries(path or DEFAULT_QUERY_FILE)


def cmd_patterson(config: RunConfig, args) -> int:
    """Patterson values of labelled shifts for the three codings of a row."""
    etas = _patterson_etas(config, args.row)
    report = patterson.patterson_report(
        list(etas.values()),
        _queries(args.queries),
        mode=args.mode,
        normalize=args.normalize,
        b5_angstrom=config.b5_angstrom,
        columns=list(etas),
    )
    _emit(report, config)
    return EXIT_OK


def cmd_surface(config: RunConfig, args) -> int:
    """Circle-approximation P(eta, d) on a grid; d in units tau*b5."""
    etas = density_grid(
        parse_eta(args.eta_min), parse_eta(args.eta_max),
        config.grid_step_value,
    )
    if args.d_points < 2:
        raise ConfigError(f"d-points must be >= 2, got {args.d_points}")
    d_max = 2.0 * patterson.circle_radius(0)
    d_values = [d_max * k / (args.d_points - 1) for k in range(args.d_points)]
    surface = patterson.patterson_surface(etas, d_values)
    frame = pd.DataFrame(
        surface,
        columns=[f"d={d:.{config.precision}f}" for d in d_values],
    )
    frame.insert(0, "eta", [to_float(e) for e in etas])
    _emit(frame, config)
    return EXIT_OK


def constants_frame(
    config: RunConfig, reference: ReferenceData
) -> pd.DataFrame:
    """Computed constants next to their printed and experimental values."""
    b5 = config.b5_angstrom
    records = terraces.plane_sequence(terraces.CANONICAL_ETA0, PATTERSON_ROW)
    D0 = density.D0(b5)
    axis_2, axis_2_prime = icosa.two_fold_axes()
    e = ModuleVector6.unit
    first_shift = icosa.star_map(e(2) - e(4))[0].length * b5
    computed = {
        "F0": density.F_MAX.value,
        "eta_max": to_float(density.ETA_MAX_FIBONACCI),
        "F_min": density.F(density.ETA_MAX_FIBONACCI).value,
        "relative_density_min": to_float(density.minimum_relative_density()),
        "pentagon_vertex_ratio": to_float(density.PENTAGON_VERTEX_RATIO),
        "D0": D0,
        "t_eq": density.equivalent_triangle_edge(D0),
        "spacing_short": to_float(terraces.SHORT_SPACING) * b5,
        "spacing_long": to_float(terraces.LONG_SPACING) * b5,
        "bergman_face_density_row16": density.D_absolute(
            records[PATTERSON_ROW].eta2, density.BERGMAN_FACE_CENTER, b5
        ).value,
        "angle_axis_2": axis_2.angle,
        "angle_axis_2_prime": axis_2_prime.angle,
        "b2_angstrom": icosa.B2 * b5,
        "first_shift_angstrom": first_shift,
    }
    bands = {
        "spacing_short": "terrace_spacing_short",
        "spacing_long": "terrace_spacing_long",
    }
    rows = []
    for name, value in computed.items():
        if name in reference.printed:
            printed = reference.printed_value(name)
        else:
            printed = float(reference.lengths.get(name, float("nan")))
        row = {
            "name": name,
            "computed": value,
            "printed": printed,
            "experimental": float("nan"),
            "uncertainty": float("nan"),
        }
        if name in bands:
            row["experimental"], row["uncertainty"] = (
                reference.experimental_band(bands[name])
            )
        rows.append(row)
    rows.append(
        {
            "name": "hole_density",
            "computed": float("nan"),
            "printed": float("nan"),
            "experimental": reference.hole_density,
            "uncertainty": float("nan"),
        }
    )
    return pd.DataFrame(rows)


def cmd_constants(config: RunConfig, args) -> int:
    """Every printed constant with its computed value."""
    frame = constants_frame(config, ReferenceData(args.reference))
    _emit(frame, config)
    return EXIT_OK


def cmd_extra(config: RunConfig, args) -> int:
    """Low-density companion planes over the terrace string."""
    window = terraces.string_window(args.start)
    records = _records(config, max(config.horizon, window.stop - 1))
    selected = [r for r in records if r.N in window]
    scale = TAU_FLOAT * config.b5_angstrom
    frame = pd.DataFrame(
        [
            {
                "N": x.N,
                "label": x.label,
                "eta1": to_float(records[x.N].eta1),
                "eta_extra": to_float(x.eta_extra),
                "F_extra": x.F,
                "offset_angstrom": to_float(x.parallel_offset) * scale,
            }
            for x in terraces.extra_planes(selected)
        ],
        columns=[
            "N", "label", "eta1", "eta_extra", "F_extra", "offset_angstrom"
        ],
    )
    _emit(frame, config)
    return EXIT_OK


def cmd_figures(config: RunConfig, args) -> int:
    """Render the figure set as static SVG files."""
    from visualization.figure_reproduce import figure_registry

    records = _records(config)
    etas = _patterson_etas(config, PATTERSON_ROW)
    report = patterson.patterson_report(
        list(etas.values()),
        _queries(args.queries),
        b5_angstrom=config.b5_angstrom,
        columns=list(etas),
    )
    figures = figure_registry(records, report)
    if args.figure:
        figures = [item for item in figures if item[0] == args.figure]
        if not figures:
            raise ConfigError(f"Figure not found: {args.figure}")
    for _, func, label in figures:
        logger.info(f"=== Generating {label} ===")
        func(args.out_dir)
    return EXIT_OK


# Parser


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration file")
    common.add_argument(
        "--b5", dest="b5_angstrom", type=float, help="basis length b5 in A"
    )
    common.add_argument(
        "--eta0", help='starting plane, e.g. "-1/(tau*(tau+2))"'
    )
    common.add_argument("--horizon", type=int, help="number of steps")
    common.add_argument("--precision", type=int, help="decimal places")
    common.add_argument("--format", choices=exporters.FORMATS)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--log-file", help="also write the log to this file")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        description="Fibonacci plane sequences, section densities and"
        " Patterson functions for 5fold surfaces of icosahedral tilings"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="plane table")
    p.add_argument(
        "--occupancy", action="store_true", help="add model occupancy columns"
    )
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("density", parents=[common], help="density profile")
    p.add_argument("--eta-min", default="0")
    p.add_argument("--eta-max", default="1")
    p.add_argument("--step", dest="grid_step", help="grid step, e.g. 1/100")
    p.add_argument(
        "--kind", default=density.VERTEX, choices=density.PROVENANCES
    )
    p.set_defaults(handler=cmd_density)

    p = sub.add_parser("search", parents=[common], help="find a tile string")
    p.add_argument("--pattern", default=fibonacci.TERRACE_STRING)
    p.add_argument(
        "--all",
        dest="interior_only",
        action="store_false",
        default=None,
        help="include occurrences touching the window boundary",
    )
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("spacing", parents=[common], help="plane spacings")
    p.add_argument("--start", type=int, default=terraces.STRING_START)
    p.add_argument("--count", type=int, default=terraces.TERRACE_COUNT)
    p.set_defaults(handler=cmd_spacing)

    p = sub.add_parser("section", parents=[common], help="section polygon")
    p.add_argument("--eta", required=True)
    p.add_argument(
        "--angstrom", action="store_true", help="coordinates in A"
    )
    p.set_defaults(handler=cmd_section)

    p = sub.add_parser("patterson", parents=[common], help="Patterson report")
    p.add_argument(
        "--queries", help=f"shift file (default {DEFAULT_QUERY_FILE})"
    )
    p.add_argument("--row", type=int, default=PATTERSON_ROW)
    p.add_argument(
        "--mode", default=patterson.EXACT, choices=patterson.MODES
    )
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(handler=cmd_patterson)

    p = sub.add_parser("surface", parents=[common], help="P(eta, d) grid")
    p.add_argument("--eta-min", default="-1")
    p.add_argument("--eta-max", default="1")
    p.add_argument("--step", dest="grid_step")
    p.add_argument("--d-points", type=int, default=41)
    p.set_defaults(handler=cmd_surface)

    p = sub.add_parser("constants", parents=[common], help="constant report")
    p.add_argument("--reference", default=DEFAULT_REFERENCE_FILE)
    p.set_defaults(handler=cmd_constants)

    p = sub.add_parser("extra", parents=[common], help="extra planes")
    p.add_argument("--start", type=int, default=terraces.STRING_START)
    p.set_defaults(handler=cmd_extra)

    p = sub.add_parser("figures", parents=[common], help="render figures")
    p.add_argument("--figure", help="only this figure id")
    p.add_argument("--out-dir", default=DEFAULT_FIGURE_DIR)
    p.add_argument("--queries")
    p.set_defaults(handler=cmd_figures)
    return parser


def _overrides(args) -> Dict[str, object]:
    keys = (
        "b5_angstrom",
        "eta0",
        "horizon",
        "precision",
        "format",
        "out",
        "interior_only",
        "grid_step",
    )
    return {key: getattr(args, key, None) for key in keys}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    setup_logging(level, args.log_file)

    try:
        loader = ConfigLoader(args.config)
        config = loader.build(_overrides(args))
        if args.verbose:
            loader.print_config_summary(config)
        return args.handler(config, args)
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_USAGE
    except TerraceModelError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_DOMAIN
