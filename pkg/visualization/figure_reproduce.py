import logging
import os
from typing import Callable, List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from src import density, patterson, terraces  # noqa: E402
from src.golden import approximate, to_float  # noqa: E402

logger = logging.getLogger(__name__)

plt.rcParams["svg.hashsalt"] = "terraces"
plt.rcParams["font.family"] = ["DejaVu Sans", "Arial", "sans-serif"]


def _save(fig, output_dir: str, name: str, fmt: str = "svg") -> str:
    os.makedirs(output_dir, exist_ok=True)
    output_path = os.path.join(output_dir, f"{name}.{fmt}")
    metadata = {"Date": None} if fmt == "svg" else None
    fig.savefig(
        output_path, bbox_inches="tight", facecolor="white", metadata=metadata
    )
    plt.close(fig)
    logger.info(f"Figure saved to {output_path}")
    return output_path


def generate_sequence_figure(
    records: Sequence[terraces.PlaneRecord],
    output_dir: str,
    shifted: str = "eta2",
    fmt: str = "svg",
) -> str:
    """
    eta1 (crosses) and a shifted coding (circles) against N, with the
    extra low-density planes as vertical bars.
    """
    N = [r.N for r in records]
    eta1 = [to_float(r.eta1) for r in records]
    other = [to_float(getattr(r, shifted)) for r in records]
    limit = to_float(terraces.ETA_WINDOW.hi)

    fig, ax = plt.subplots(figsize=(10, 5))
    ax.scatter(N, eta1, marker="x", color="black", label="eta1")
    ax.scatter(
        N, other, marker="o", facecolors="none", edgecolors="tab:blue",
        label=shifted,
    )
    for extra in terraces.extra_planes(records):
        ax.vlines(
            extra.N, to_float(extra.eta_extra), 0.0, color="tab:red",
            linewidth=3, alpha=0.6,
        )
        ax.annotate(
            extra.label, (extra.N, to_float(extra.eta_extra)),
            textcoords="offset points", xytext=(4, 0), fontsize=9,
        )
    for level in (-limit, limit):
        ax.axhline(level, color="gray", linestyle="--", linewidth=0.8)
    window = terraces.string_window()
    ax.axvspan(window.start - 0.5, window.stop - 0.5, color="0.92", zorder=0)
    ax.set_xlabel("N")
    ax.set_ylabel("eta")
    ax.set_xlim(min(N) - 0.5, max(N) + 0.5)
    ax.legend(loc="upper right", frameon=False)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_dir, f"sequence_{shifted}", fmt)


def generate_area_figure(output_dir: str, fmt: str = "svg") -> str:
    """F(|eta|) on [0, 1] with the Fibonacci limits marked."""
    eta = np.linspace(0.0, 1.0, 401)
    values = [density.F(approximate(e)).value for e in eta]
    eta_max = to_float(density.ETA_MAX_FIBONACCI)
    F_min = density.F(density.ETA_MAX_FIBONACCI).value

    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(eta, values, color="black", linewidth=2)
    ax.axhline(F_min, color="tab:red", linestyle="--", linewidth=1)
    ax.axvline(eta_max, color="tab:red", linestyle="--", linewidth=1)
    for b in density.BREAKPOINTS:
        ax.axvline(to_float(b), color="gray", linestyle=":", linewidth=0.8)
    ax.set_xlabel("|eta|")
    ax.set_ylabel("F(|eta|)")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, None)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_dir, "area_profile", fmt)


def generate_surface_figure(
    output_dir: str, points: int = 61, fmt: str = "svg"
) -> str:
    """Circle-approximation Patterson surface P(eta, d)."""
    eta = np.linspace(-1.0, 1.0, points)
    d = np.linspace(0.0, 2.0 * patterson.circle_radius(0), points)
    surface = patterson.patterson_surface(eta, d)
    D, E = np.meshgrid(d, eta)

    fig = plt.figure(figsize=(8, 6))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(E, D, surface, cmap="viridis", linewidth=0)
    ax.set_xlabel("eta")
    ax.set_ylabel("|v_perp|")
    ax.set_zlabel("P")
    return _save(fig, output_dir, "patterson_surface", fmt)


def generate_circle_glyph_figure(
    report: pd.DataFrame,
    positions: Optional[Sequence[Tuple[float, float]]] = None,
    output_dir: str = "figures",
    fmt: str = "svg",
) -> str:
    """
    One panel per P column; each shift is drawn as a circle whose area is
    proportional to its Patterson value.
    """
    value_columns = [c for c in report.columns if c.startswith("P(")]
    if positions is None:
        positions = [(float(i), 0.0) for i in range(len(report))]
    largest = float(report[value_columns].to_numpy().max()) or 1.0

    fig, axes = plt.subplots(
        1, len(value_columns), figsize=(5 * len(value_columns), 4),
        squeeze=False,
    )
    for ax, column in zip(axes[0], value_columns):
        for (x, y), label, value in zip(
            positions, report["label"], report[column]
        ):
            radius = 0.45 * np.sqrt(max(value, 0.0) / largest)
            ax.add_patch(
                plt.Circle((x, y), radius, color="tab:blue", alpha=0.6)
            )
            ax.annotate(label, (x, y - 0.6), ha="center", fontsize=8)
        xs = [p[0] for p in positions]
        ys = [p[1] for p in positions]
        ax.set_xlim(min(xs) - 1, max(xs) + 1)
        ax.set_ylim(min(ys) - 1, max(ys) + 1)
        ax.set_aspect("equal")
        ax.set_title(column)
        ax.axis("off")
    return _save(fig, output_dir, "patterson_glyphs", fmt)


def generate_patterson_profile_figure(
    report: pd.DataFrame, output_dir: str = "figures", fmt: str = "svg"
) -> str:
    """P of every labelled shift, one line per P column, in report order."""
    value_columns = [c for c in report.columns if c.startswith("P(")]
    x = np.arange(len(report))

    fig, ax = plt.subplots(figsize=(max(6, 0.8 * len(report)), 4.5))
    for column, marker in zip(value_columns, ("o", "s", "^", "D", "v")):
        ax.plot(x, report[column], marker=marker, linewidth=1.2, label=column)
    ax.set_xticks(x)
    ax.set_xticklabels(report["label"])
    ax.set_xlabel("shift")
    ax.set_ylabel("P")
    ax.set_ylim(0, None)
    ax.legend(loc="upper right", frameon=False)
    ax.grid(True, alpha=0.3)
    return _save(fig, output_dir, "patterson_profile", fmt)


def figure_registry(
    records: Sequence[terraces.PlaneRecord], report: pd.DataFrame
) -> List[Tuple[str, Callable[[str], str], str]]:
    """(id, function(output_dir), label) for every reproducible figure."""
    return [
        (
            "sequence",
            lambda out: generate_sequence_figure(records, out, "eta2"),
            "Plane sequence with Bergman faces",
        ),
        (
            "sequence3",
            lambda out: generate_sequence_figure(records, out, "eta3"),
            "Plane sequence with vertex points",
        ),
        ("area", generate_area_figure, "Section area profile"),
        ("surface", generate_surface_figure, "Patterson surface"),
        (
            "glyphs",
            lambda out: generate_circle_glyph_figure(report, output_dir=out),
            "Patterson circle glyphs",
        ),
        (
            "profile",
            lambda out: generate_patterson_profile_figure(report, out),
            "Patterson values per shift",
        ),
    ]
