#!/usr/bin/env python3
"""
Writers for tabular and polygon output.

Every table leaves the program as a pandas DataFrame: CSV with a fixed
float format and '\\n' line ends, or a padded text table for terminals.
Polygons are drawn with matplotlib and written as SVG.
"""

import io
import logging
import os
import sys
from typing import Optional

import matplotlib
import numpy as np
import pandas as pd
from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from src.errors import ConfigError

logger = logging.getLogger(__name__)

CSV = "csv"
SVG = "svg"
PRETTY = "pretty"
FORMATS = (CSV, SVG, PRETTY)

# text stays text; fixed ids keep the output reproducible
SVG_RC = {"svg.fonttype": "none", "svg.hashsalt": "terraces"}


def float_format(precision: int) -> str:
    return f"%.{precision}f"


def render_frame(frame: pd.DataFrame, precision: int, fmt: str = CSV) -> str:
    """
    Raises:
        ConfigError: If fmt is not a tabular format
    """
    if fmt == CSV:
        buffer = io.StringIO()
        frame.to_csv(
            buffer,
            index=False,
            float_format=float_format(precision),
            lineterminator="\n",
        )
        return buffer.getvalue()
    if fmt == PRETTY:
        return (
            frame.to_string(
                index=False,
                float_format=lambda v: float_format(precision) % v,
            )
            + "\n"
        )
    raise ConfigError(f"format {fmt!r} is not available for tables")


def _write_text(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(out)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote {out}")


def write_frame(
    frame: pd.DataFrame,
    out: Optional[str] = None,
    precision: int = 4,
    fmt: str = CSV,
):
    """Write a DataFrame to a file, or to stdout when out is None."""
    _write_text(render_frame(frame, precision, fmt), out)
    logger.info(f"{len(frame)} rows written")


def polygon_frame(vertices) -> pd.DataFrame:
    vertices = np.asarray(vertices, dtype=float).reshape(-1, 2)
    return pd.DataFrame(
        {
            "index": np.arange(len(vertices)),
            "x": vertices[:, 0],
            "y": vertices[:, 1],
        }
    )


def polygon_svg(vertices, size: float = 4.0, label: str = "") -> str:
    """
    Static SVG of one filled polygon, drawn with matplotlib.

    Args:
        vertices: (n, 2) polygon corners in order
        size: Figure edge length in inches
        label: Title drawn above the polygon

    Returns:
        The SVG document; the polygon patch carries id="section"
    """
    vertices = np.asarray(vertices, dtype=float).reshape(-1, 2)
    extent = float(np.abs(vertices).max()) if len(vertices) else 1.0
    extent = 1.1 * (extent or 1.0)

    fig = Figure(figsize=(size, size))
    ax = fig.add_subplot()
    ax.add_patch(
        Polygon(
            vertices, closed=True, facecolor="#c8d7ea", edgecolor="#1f3b63",
            linewidth=1.5, gid="section",
        )
    )
    ax.set_xlim(-extent, extent)
    ax.set_ylim(-extent, extent)
    ax.set_aspect("equal")
    ax.axis("off")
    if label:
        ax.set_title(label)

    buffer = io.StringIO()
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(
            buffer, format="svg", bbox_inches="tight", facecolor="white",
            metadata={"Date": None},
        )
    return buffer.getvalue()


def write_polygon_svg(vertices, out: Optional[str], label: str = ""):
    _write_text(polygon_svg(vertices, label=label), out)
