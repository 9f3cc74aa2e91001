#!/usr/bin/env python3
"""
Sequences of planes perpendicular to a 5fold axis.

A Fibonacci line along a 2fold axis codes the heights eta of a sequence of
parallel planes. Each plane carries three codings: eta1 for the plane
itself, eta2 shifted down by 1/(tau+2) for the centers of Bergman top faces
touching it from below, and eta3 shifted up by 1/(tau+2). Shifted values
are reduced into the eta window (-tau^2/(tau+2), tau^2/(tau+2)]; whether a
reduction was needed decides the occupancy of a plane in the three models.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from src import density, fibonacci
from src.errors import TerraceModelError, WindowError
from src.fibonacci import ETA_PER_Y, TILE_LONG, TILE_SHORT, Window1D
from src.golden import (
    ONE,
    TAU,
    TAU_INV,
    GoldenScalar,
    to_float,
)
from src.icosa import B5_ANGSTROM

logger = logging.getLogger(__name__)

ETA_WINDOW = Window1D(-TAU * TAU / (TAU + 2), TAU * TAU / (TAU + 2))
ETA_WINDOW_WIDTH = ETA_WINDOW.length
BERGMAN_SHIFT = ONE / (TAU + 2)
# companion planes sit tau^-1 closer in E_par than a short spacing
EXTRA_PLANE_OFFSET = 2 * TAU_INV / (TAU + 2)

# eta0 = -tau^-1/(tau+2) is the image of y0 = -1/2
CANONICAL_ETA0 = -TAU_INV / (TAU + 2)

STRING_START = 9
TERRACE_COUNT = 11

MODEL_VERTEX = "i"
MODEL_FACE = "ii"
MODEL_CUT = "iii"
MODELS = (MODEL_VERTEX, MODEL_FACE, MODEL_CUT)

SHORT_SPACING = 2 * TAU / (TAU + 2)
LONG_SPACING = 2 * TAU * TAU / (TAU + 2)

TABLE_COLUMNS = ["N", "eta1", "eta2", "eta3", "F1", "F2", "F3"]


@dataclass(frozen=True)
class OccupancyFlags:
    N: int
    vertex_points: bool
    bergman_top_face: bool
    bergman_top_cut: bool

    def __post_init__(self):
        if self.bergman_top_face and self.bergman_top_cut:
            raise TerraceModelError(
                f"plane N={self.N} cannot carry both Bergman top faces and"
                " top cuts"
            )


@dataclass(frozen=True)
class PlaneRecord:
    """One plane of the sequence: the three eta codings and their areas."""

    N: int
    y_perp: GoldenScalar
    eta1: GoldenScalar
    eta2: GoldenScalar
    eta3: GoldenScalar
    eta2_wrapped: bool
    eta3_wrapped: bool
    tile_to_next: Optional[str]

    @property
    def F1(self) -> float:
        return density.F(self.eta1).value

    @property
    def F2(self) -> float:
        return density.F(self.eta2).value

    @property
    def F3(self) -> float:
        return density.F(self.eta3).value

    @property
    def terrace(self) -> Optional[int]:
        return terrace_number(self.N)

    def as_row(self) -> Dict[str, float]:
        return {
            "N": self.N,
            "eta1": to_float(self.eta1),
            "eta2": to_float(self.eta2),
            "eta3": to_float(self.eta3),
            "F1": self.F1,
            "F2": self.F2,
            "F3": self.F3,
        }


@dataclass(frozen=True)
class SpacingSequence:
    tiles: str
    spacings: tuple = field(default_factory=tuple)

    @property
    def total(self) -> float:
        return float(sum(self.spacings))

    def __len__(self):
        return len(self.spacings)


@dataclass(frozen=True)
class ExtraPlane:
    """Low-density companion of a plane with tau/(tau+2) <= |eta1|."""

    N: int
    terrace: Optional[int]
    sign: str
    eta_extra: GoldenScalar
    parallel_offset: GoldenScalar

    @property
    def label(self) -> str:
        """Terrace number and sign, or N-prefixed outside the terraces."""
        if self.terrace is None:
            return f"N{self.N}{self.sign}"
        return f"{self.terrace}{self.sign}"

    @property
    def F(self) -> float:
        return density.F(self.eta_extra).value


def eta_of_y(y) -> GoldenScalar:
    """
    Plane height eta coded by the Fibonacci coordinate y.

    Raises:
        WindowError: If y is outside (-tau^3/2, tau^3/2]
    """
    y = GoldenScalar.coerce(y)
    if not fibonacci.Y_WINDOW.contains(y):
        raise WindowError(
            f"y={to_float(y):.6f} outside the Fibonacci window"
            " (-tau^3/2, tau^3/2]"
        )
    return ETA_PER_Y * y


def y_of_eta(eta) -> GoldenScalar:
    """
    Raises:
        WindowError: If eta is outside the eta window
    """
    eta = GoldenScalar.coerce(eta)
    if not ETA_WINDOW.contains(eta):
        raise WindowError(
            f"eta0={to_float(eta):.6f} outside the eta window"
            f" (-{to_float(ETA_WINDOW.hi):.4f}, {to_float(ETA_WINDOW.hi):.4f}]"
        )
    return eta / ETA_PER_Y


def _wrap(value: GoldenScalar):
    """Reduce value into the eta window; returns (reduced, turns)."""
    hi, width = ETA_WINDOW.hi, ETA_WINDOW_WIDTH
    turns = math.ceil((to_float(value) - to_float(hi)) / to_float(width))
    reduced = value - turns * width
    # float estimate may be off by one next to the boundary
    while (reduced - hi).sign() > 0:
        reduced, turns = reduced - width, turns + 1
    while not ETA_WINDOW.contains(reduced):
        reduced, turns = reduced + width, turns - 1
    return reduced, turns


def wrap_eta(eta, delta) -> GoldenScalar:
    """eta + delta reduced modulo the window width 2 tau^2/(tau+2)."""
    value = GoldenScalar.coerce(eta) + GoldenScalar.coerce(delta)
    return _wrap(value)[0]


def plane_sequence(eta0=CANONICAL_ETA0, count: int = 24) -> List[PlaneRecord]:
    """
    Generate count + 1 planes starting from eta0.

    Raises:
        WindowError: If eta0 is outside the eta window or count < 0
    """
    y0 = y_of_eta(eta0)
    records = []
    for entry in fibonacci.sequence(y0, count):
        eta1 = eta_of_y(entry.y_perp)
        eta2, turns2 = _wrap(eta1 - BERGMAN_SHIFT)
        eta3, turns3 = _wrap(eta1 + BERGMAN_SHIFT)
        records.append(
            PlaneRecord(
                N=entry.N,
                y_perp=entry.y_perp,
                eta1=eta1,
                eta2=eta2,
                eta3=eta3,
                eta2_wrapped=turns2 != 0,
                eta3_wrapped=turns3 != 0,
                tile_to_next=entry.tile_to_next,
            )
        )
    logger.debug(
        f"Plane sequence of {len(records)} planes from"
        f" eta0={to_float(eta0):.4f}"
    )
    return records


def table_frame(records: Sequence[PlaneRecord]) -> pd.DataFrame:
    """Table of the three eta codings and section areas, one row per N."""
    return pd.DataFrame(
        [r.as_row() for r in records], columns=TABLE_COLUMNS
    ).astype({"N": int})


def _check_model(model: str):
    if model not in MODELS:
        raise TerraceModelError(
            f"unknown occupancy model {model!r}; expected one of {MODELS}"
        )


def occupancy(
    records: Sequence[PlaneRecord], model: str
) -> List[OccupancyFlags]:
    """
    Per-plane occupancy under one of the three models.

    (i)   planes of vertex points; Bergman top faces touch from below unless
          the downward shift had to be wrapped, in which case the plane
          carries top cuts instead.
    (ii)  planes of Bergman top faces; vertex points present unless the
          upward shift had to be wrapped.
    (iii) planes of Bergman top cuts; vertex points only where the upward
          shift was wrapped.

    Raises:
        TerraceModelError: If model is not one of i, ii, iii
    """
    _check_model(model)
    flags = []
    for r in records:
        if model == MODEL_VERTEX:
            flags.append(
                OccupancyFlags(
                    r.N,
                    vertex_points=True,
                    bergman_top_face=not r.eta2_wrapped,
                    bergman_top_cut=r.eta2_wrapped,
                )
            )
        elif model == MODEL_FACE:
            flags.append(
                OccupancyFlags(
                    r.N,
                    vertex_points=not r.eta3_wrapped,
                    bergman_top_face=True,
                    bergman_top_cut=False,
                )
            )
        else:
            flags.append(
                OccupancyFlags(
                    r.N,
                    vertex_points=r.eta3_wrapped,
                    bergman_top_face=False,
                    bergman_top_cut=True,
                )
            )
    return flags


def occupancy_exceptions(
    records: Sequence[PlaneRecord],
    model: str,
    planes: Optional[Sequence[int]] = None,
) -> List[int]:
    """
    Planes N where the secondary occupancy of a model deviates.

    Model (i): planes without Bergman top faces. Model (ii): planes without
    vertex points. Model (iii): the only planes with vertex points.
    """
    keep = set(planes) if planes is not None else None
    result = []
    for flag in occupancy(records, model):
        if keep is not None and flag.N not in keep:
            continue
        if model == MODEL_VERTEX:
            exceptional = not flag.bergman_top_face
        elif model == MODEL_FACE:
            exceptional = not flag.vertex_points
        else:
            exceptional = flag.vertex_points
        if exceptional:
            result.append(flag.N)
    return result


def extra_planes(records: Sequence[PlaneRecord]) -> List[ExtraPlane]:
    """
    Additional low-density planes next to planes with large |eta1|.

    A plane with tau/(tau+2) <= |eta1| <= tau^2/(tau+2) has a companion at
    eta1 -+ 2tau^2/(tau+2), toward the far side of the triacontahedron. In
    E_par it lies 2tau^-1/(tau+2) (units tau*b5) above ("+", eta1 < 0) or
    below ("-", eta1 > 0) the plane.
    """
    lower, upper = density.BREAKPOINT_2, density.BREAKPOINT_3
    result = []
    for r in records:
        magnitude = abs(r.eta1)
        if magnitude < lower or magnitude > upper:
            continue
        if r.eta1.sign() > 0:
            sign, eta_extra, offset = (
                "-",
                r.eta1 - ETA_WINDOW_WIDTH,
                -EXTRA_PLANE_OFFSET,
            )
        else:
            sign, eta_extra, offset = (
                "+",
                r.eta1 + ETA_WINDOW_WIDTH,
                EXTRA_PLANE_OFFSET,
            )
        result.append(ExtraPlane(r.N, r.terrace, sign, eta_extra, offset))
    return result


def spacing_in_angstrom(
    records: Sequence[PlaneRecord], b5_angstrom: float = B5_ANGSTROM
) -> SpacingSequence:
    """Inter-plane distances in A for the tiles between consecutive records."""
    short = to_float(SHORT_SPACING) * b5_angstrom
    long = to_float(LONG_SPACING) * b5_angstrom
    tiles = "".join(
        r.tile_to_next for r in records[:-1] if r.tile_to_next is not None
    )
    values = {TILE_LONG: long, TILE_SHORT: short}
    return SpacingSequence(tiles, tuple(values[t] for t in tiles))


def terrace_number(N: int, start: int = STRING_START) -> Optional[int]:
    """Terrace 1..11 for plane N of the string, None outside it."""
    terrace = N - start + 1
    return terrace if 1 <= terrace <= TERRACE_COUNT else None


CODINGS = ("eta1", "eta2", "eta3")


def density_extremes(
    records: Sequence[PlaneRecord],
    coding: str = "eta2",
    start: int = STRING_START,
) -> Tuple[List[int], List[int]]:
    """
    Terraces with the highest and the lowest section area of one coding.

    eta1 ranks vertex density, eta2 the density of Bergman top faces. Areas
    are compared exactly, so every plane on the flat top of F(eta) ties for
    the maximum.

    Args:
        records: Planes, usually from plane_sequence()
        coding: One of eta1, eta2, eta3
        start: Plane N of terrace 1

    Returns:
        (highest, lowest) as sorted terrace numbers

    Raises:
        TerraceModelError: If the coding is unknown or no record is a
            terrace
    """
    if coding not in CODINGS:
        raise TerraceModelError(
            f"unknown coding {coding!r}; expected one of {CODINGS}"
        )
    areas = {}
    for r in records:
        terrace = terrace_number(r.N, start)
        if terrace is not None:
            areas[terrace] = density.F(getattr(r, coding)).coeff
    if not areas:
        raise TerraceModelError(f"no terrace planes from N={start}")
    top, bottom = max(areas.values()), min(areas.values())
    highest = sorted(t for t, a in areas.items() if a == top)
    lowest = sorted(t for t, a in areas.items() if a == bottom)
    logger.debug(f"{coding}: highest terraces {highest}, lowest {lowest}")
    return highest, lowest


def string_window(start: int = STRING_START) -> range:
    """Plane numbers N carrying the eleven terraces."""
    return range(start, start + TERRACE_COUNT)
