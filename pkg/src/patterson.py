#!/usr/bin/env python3
"""
Planar Patterson function of the vertex set.

For a plane coded by eta, the Patterson function at a plane-parallel lattice
shift v is the overlap area of the window section with its copy translated
by the in-plane part of v_perp. The circle approximation replaces the
section by the disc of equal area F(eta).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src import density, icosa, polygon
from src.errors import GeometryError, TerraceModelError
from src.golden import GoldenScalar, approximate, to_float
from src.icosa import B5_ANGSTROM, ModuleVector6

logger = logging.getLogger(__name__)

EXACT = "exact_polygon"
CIRCLE = "circle"
MODES = (EXACT, CIRCLE)

MONTE_CARLO_CHUNK = 1_000_000


@dataclass(frozen=True)
class PattersonQuery:
    eta: GoldenScalar
    shift: ModuleVector6
    mode: str = EXACT

    def __post_init__(self):
        object.__setattr__(self, "eta", GoldenScalar.coerce(self.eta))
        if self.mode not in MODES:
            raise TerraceModelError(
                f"unknown Patterson mode {self.mode!r}; expected one of {MODES}"
            )
        # rejects shifts with an axial component
        icosa.in_plane_shift(self.shift)

    @property
    def in_plane(self) -> np.ndarray:
        """In-plane part of v_perp, units of tau*b5."""
        return icosa.in_plane_shift(self.shift)

    @property
    def distance(self) -> float:
        return float(np.hypot(*self.in_plane))

    def parallel_length(self, b5_angstrom: float = B5_ANGSTROM) -> float:
        """|v_par| in A."""
        return icosa.star_map(self.shift)[0].length * b5_angstrom


def patterson_exact(q: PattersonQuery) -> float:
    """
    Overlap area of the section S(eta) and S(eta) + v_perp.

    Raises:
        GeometryError: If |eta| > 1
    """
    section = icosa.triacontahedron().section(q.eta)
    if section.vertex_count < 3:
        return 0.0
    moved = section.vertices + q.in_plane
    return polygon.overlap_area(section.vertices, moved)


def circle_radius(eta) -> float:
    """Radius of the disc with area F(eta)."""
    return math.sqrt(density.F(eta).value / math.pi)


def lens_area(r: float, d: float) -> float:
    """Overlap of two discs of radius r at center distance d."""
    if d < 0:
        raise GeometryError(f"distance must be >= 0, got {d}")
    if r <= 0 or d >= 2.0 * r:
        return 0.0
    return 2.0 * r * r * math.acos(d / (2.0 * r)) - 0.5 * d * math.sqrt(
        4.0 * r * r - d * d
    )


def patterson_circle(eta, d: float) -> float:
    """
    Circle approximation at in-plane distance d (units tau*b5).

    Raises:
        GeometryError: If d < 0 or |eta| > 1
    """
    return lens_area(circle_radius(eta), float(d))


def patterson(q: PattersonQuery) -> float:
    if q.mode == CIRCLE:
        return patterson_circle(q.eta, q.distance)
    return patterson_exact(q)


def patterson_normalized(q: PattersonQuery) -> float:
    """
    P(v)/P(0).

    Raises:
        GeometryError: If the section has zero area
    """
    origin = PattersonQuery(q.eta, ModuleVector6((0,) * 6), q.mode)
    p0 = patterson(origin)
    if p0 <= 0:
        raise GeometryError(
            f"P(0) vanishes at eta={to_float(q.eta):.4f}; cannot normalize"
        )
    return patterson(q) / p0


def patterson_surface(eta_grid: Sequence, d_grid: Sequence) -> np.ndarray:
    """
    Circle-mode P on the product grid; rows follow eta, columns follow d.

    eta values may be floats here; the area is evaluated through the exact
    branch selection of the nearest rational.
    """
    d_values = np.asarray(d_grid, dtype=float)
    surface = np.zeros((len(eta_grid), len(d_values)))
    for i, eta in enumerate(eta_grid):
        r = circle_radius(approximate(eta))
        surface[i] = [lens_area(r, d) for d in d_values]
    return surface


def patterson_report(
    etas: Sequence,
    shifts: Sequence[Tuple[str, ModuleVector6]],
    mode: str = EXACT,
    normalize: bool = False,
    b5_angstrom: float = B5_ANGSTROM,
    columns: Optional[Sequence[str]] = None,
) -> pd.DataFrame:
    """
    Patterson values for labelled shifts at several plane heights.

    The first row is the zero shift "0". Columns are label, |v_par| in A,
    and one P column per eta (named P(eta1), P(eta2), ... unless given).

    Raises:
        GeometryError: If a shift is not plane-parallel
    """
    names = list(columns) if columns else [
        f"P(eta{i + 1})" for i in range(len(etas))
    ]
    if len(names) != len(etas):
        raise TerraceModelError(
            f"{len(names)} column names for {len(etas)} eta values"
        )
    rows = [("0", ModuleVector6((0,) * 6))] + list(shifts)
    records = []
    for label, shift in rows:
        record = {"label": label}
        for name, eta in zip(names, etas):
            q = PattersonQuery(eta, shift, mode)
            record["v_par_angstrom"] = q.parallel_length(b5_angstrom)
            record[name] = (
                patterson_normalized(q) if normalize else patterson(q)
            )
        records.append(record)
        logger.debug(f"Patterson row {label}: {record}")
    return pd.DataFrame(records, columns=["label", "v_par_angstrom"] + names)


def monte_carlo_overlap(
    vertices,
    shift,
    samples: int = 10_000_000,
    rng: Optional[np.random.Generator] = None,
) -> Tuple[float, float]:
    """
    Sampling estimate of the overlap area of a convex polygon and its
    translate; returns (estimate, standard error).
    """
    vertices = polygon.as_polygon(vertices)
    moved = vertices + np.asarray(shift, dtype=float)
    rng = rng or np.random.default_rng(0)
    lo = vertices.min(axis=0)
    hi = vertices.max(axis=0)
    box = float(np.prod(hi - lo))
    hits = 0
    remaining = samples
    while remaining > 0:
        n = min(remaining, MONTE_CARLO_CHUNK)
        points = rng.uniform(lo, hi, size=(n, 2))
        inside = polygon.contains(vertices, points) & polygon.contains(
            moved, points
        )
        hits += int(inside.sum())
        remaining -= n
    p = hits / samples
    return box * p, box * math.sqrt(p * (1.0 - p) / samples)


def plane_parallel_shifts(max_index: int = 1) -> List[ModuleVector6]:
    """
    Lattice vectors with indices in [-max_index, max_index] parallel to the
    planes (n1 = 0 and n2 + ... + n6 = 0), zero excluded.
    """
    found = []
    for rest in itertools.product(range(-max_index, max_index + 1), repeat=5):
        if sum(rest) != 0 or not any(rest):
            continue
        found.append(ModuleVector6((0,) + rest))
    return found
