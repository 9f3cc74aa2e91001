#!/usr/bin/env python3
"""
Fibonacci lines from the square-lattice projection.

A Fibonacci tiling is coded by the perpendicular coordinate of its vertices.
The state carried here is the midpoint-scaled coordinate
y = tau * x_perp - 1/2 with window (-tau**3/2, tau**3/2]. Each step either
subtracts tau (tile L, parallel advance tau) or adds tau**2 (tile S,
parallel advance 1), whichever keeps y in the window.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.errors import PatternError, WindowError
from src.golden import (
    HALF,
    ONE,
    TAU,
    TAU_CUBED,
    TAU_FLOAT,
    TAU_INV,
    ZERO,
    GoldenScalar,
    in_half_open,
    to_float,
)

logger = logging.getLogger(__name__)

TILE_LONG = "L"
TILE_SHORT = "S"
TILES = (TILE_LONG, TILE_SHORT)

DEFAULT_HORIZON = 10_000
TERRACE_STRING = "LLSLLSLSLL"

# y -> eta along the 5fold axis of the triacontahedron, in units tau*b5
ETA_PER_Y = 2 * TAU_INV / (TAU + 2)


@dataclass(frozen=True)
class LatticePoint2:
    """Point n1*e1 + n2*e2 of the square lattice."""

    n1: int
    n2: int

    @property
    def x_par(self) -> GoldenScalar:
        return self.n1 * TAU + self.n2

    @property
    def x_perp(self) -> GoldenScalar:
        return -self.n1 + self.n2 * TAU

    @property
    def N(self) -> int:
        return self.n1 + self.n2


@dataclass(frozen=True)
class Window1D:
    """Half-open interval (lo, hi]."""

    lo: GoldenScalar
    hi: GoldenScalar

    def contains(self, x) -> bool:
        return in_half_open(x, self.lo, self.hi)

    @property
    def length(self) -> GoldenScalar:
        return self.hi - self.lo


# Vertex window in x_perp and its midpoint-scaled version in y
F_WINDOW = Window1D(-ONE, TAU)
Y_WINDOW = Window1D(-TAU_CUBED / 2, TAU_CUBED / 2)

SUBWINDOWS_X = {
    "LS": Window1D(-ONE, ZERO),
    "LL": Window1D(ZERO, TAU_INV),
    "SL": Window1D(TAU_INV, TAU),
}


@dataclass(frozen=True)
class FibonacciState:
    y_perp: GoldenScalar
    N: int = 0

    def __post_init__(self):
        if not Y_WINDOW.contains(self.y_perp):
            raise WindowError(
                f"y_perp={to_float(self.y_perp):.6f} outside"
                f" (-tau^3/2, tau^3/2]"
            )


@dataclass(frozen=True)
class SequenceEntry:
    """One vertex of a coded Fibonacci line and the tile leaving it."""

    N: int
    y_perp: GoldenScalar
    tile_to_next: Optional[str]


@dataclass(frozen=True)
class StringOccurrence:
    start: int
    pattern: str
    y_values: Tuple[GoldenScalar, ...]

    @property
    def stop(self) -> int:
        return self.start + len(self.pattern)

    @property
    def margin_up(self) -> GoldenScalar:
        """Largest upward shift of y keeping every point in the window."""
        return Y_WINDOW.hi - max(self.y_values)

    @property
    def margin_down(self) -> GoldenScalar:
        """Largest downward shift of y (non-positive)."""
        return Y_WINDOW.lo - min(self.y_values)

    @property
    def is_interior(self) -> bool:
        return self.margin_up.sign() > 0 and self.margin_down.sign() < 0


def x_from_y(y_perp: GoldenScalar) -> GoldenScalar:
    return (y_perp + HALF) / TAU


def vertex_type(x_perp: GoldenScalar) -> str:
    """
    Classify a vertex by its neighbouring tiles (LS, LL or SL).

    Raises:
        WindowError: If x_perp is outside (-1, tau]
    """
    x_perp = GoldenScalar.coerce(x_perp)
    for name, window in SUBWINDOWS_X.items():
        if window.contains(x_perp):
            return name
    raise WindowError(f"x_perp={to_float(x_perp):.6f} outside (-1, tau]")


def vertex_type_y(y_perp: GoldenScalar) -> str:
    return vertex_type(x_from_y(GoldenScalar.coerce(y_perp)))


def step(state: FibonacciState) -> Tuple[FibonacciState, str]:
    """Advance one vertex along the line; returns the new state and tile."""
    long_y = state.y_perp - TAU
    short_y = state.y_perp + TAU * TAU
    long_ok = Y_WINDOW.contains(long_y)
    short_ok = Y_WINDOW.contains(short_y)
    # the window has length tau**3 = tau + tau**2, so one branch fits
    assert long_ok != short_ok, f"ambiguous step at y={state.y_perp!r}"
    if long_ok:
        return FibonacciState(long_y, state.N + 1), TILE_LONG
    return FibonacciState(short_y, state.N + 1), TILE_SHORT


def sequence(y0, count: int) -> List[SequenceEntry]:
    """
    Iterate step() count times from y0.

    Returns count + 1 entries; the last one has tile_to_next None.

    Raises:
        WindowError: If y0 is outside the window or count is negative
    """
    if count < 0:
        raise WindowError(f"count must be >= 0, got {count}")
    state = FibonacciState(GoldenScalar.coerce(y0), 0)
    entries = []
    for _ in range(count):
        new_state, tile = step(state)
        entries.append(SequenceEntry(state.N, state.y_perp, tile))
        state = new_state
    entries.append(SequenceEntry(state.N, state.y_perp, None))
    logger.debug(f"Generated {count} steps from y0={to_float(y0):.6f}")
    return entries


def tile_string(entries: List[SequenceEntry]) -> str:
    return "".join(e.tile_to_next for e in entries if e.tile_to_next)


def _validate_pattern(pattern: str):
    if not pattern:
        raise PatternError("pattern must be nonempty")
    bad = sorted(set(pattern) - set(TILES))
    if bad:
        raise PatternError(
            f"pattern {pattern!r} contains invalid symbols {bad}; use L and S"
        )


def locate_string(
    y0,
    pattern: str,
    horizon: int = DEFAULT_HORIZON,
    interior_only: bool = False,
) -> List[StringOccurrence]:
    """
    Find all occurrences of a tile pattern within the first horizon tiles.

    An occurrence is interior when the whole run of points can be shifted
    both up and down inside the window without changing the string; an
    occurrence with a point on the closed upper window boundary is not.

    Args:
        y0: Starting coordinate in (-tau**3/2, tau**3/2]
        pattern: Nonempty word over {L, S}
        horizon: Number of tiles generated from y0
        interior_only: Drop occurrences touching the window boundary

    Returns:
        Occurrences in order of their start index N

    Raises:
        PatternError: If the pattern is empty or not over {L, S}
    """
    _validate_pattern(pattern)
    if horizon < len(pattern):
        return []
    entries = sequence(y0, horizon)
    tiles = tile_string(entries)
    occurrences = []
    start = tiles.find(pattern)
    while start != -1:
        points = tuple(
            e.y_perp for e in entries[start : start + len(pattern) + 1]
        )
        occurrence = StringOccurrence(start, pattern, points)
        if occurrence.is_interior or not interior_only:
            occurrences.append(occurrence)
        start = tiles.find(pattern, start + 1)
    logger.debug(
        f"Pattern {pattern} found at {[o.start for o in occurrences]}"
        f" within {horizon} tiles"
    )
    return occurrences


def find_string(
    y0,
    pattern: str,
    horizon: int = DEFAULT_HORIZON,
    interior_only: bool = False,
) -> List[int]:
    """Start indices N of every occurrence; see locate_string()."""
    return [
        o.start for o in locate_string(y0, pattern, horizon, interior_only)
    ]


def string_shift_bounds(
    y0,
    pattern: str = TERRACE_STRING,
    start: Optional[int] = None,
    horizon: int = DEFAULT_HORIZON,
) -> Tuple[GoldenScalar, GoldenScalar]:
    """
    Admissible shifts (up, down) in eta that preserve an occurrence.

    The occurrence is the one starting at `start`, or the first interior
    occurrence when start is None. Both bounds are exact; down is <= 0.

    Raises:
        PatternError: If the pattern does not occur as requested
    """
    occurrences = locate_string(
        y0, pattern, horizon, interior_only=start is None
    )
    if start is not None:
        occurrences = [o for o in occurrences if o.start == start]
    if not occurrences:
        where = "" if start is None else f" at N={start}"
        raise PatternError(f"pattern {pattern} not present{where}")
    occurrence = occurrences[0]
    return (
        ETA_PER_Y * occurrence.margin_up,
        ETA_PER_Y * occurrence.margin_down,
    )


def lattice_scan(y0, count: int) -> Tuple[List[LatticePoint2], str]:
    """
    Select vertices directly from the square lattice by the window rule.

    For every N = n1 + n2 in 0..count the lattice points near the line are
    scanned and the one with c + x_perp(n1, n2) in (-1, tau] is kept, where
    c is the perpendicular coordinate of the initial vertex. Tiles are read
    off from which index advanced.

    Raises:
        WindowError: If the window selects zero or several points for some N
    """
    c = x_from_y(GoldenScalar.coerce(y0))
    if not F_WINDOW.contains(c):
        raise WindowError(f"y0={to_float(y0):.6f} outside the window")
    points = []
    for N in range(count + 1):
        center = (to_float(c) + N * TAU_FLOAT) / (TAU_FLOAT + 1.0)
        base = math.floor(center)
        selected = [
            LatticePoint2(n1, N - n1)
            for n1 in range(base - 2, base + 4)
            if F_WINDOW.contains(c + LatticePoint2(n1, N - n1).x_perp)
        ]
        if len(selected) != 1:
            raise WindowError(
                f"window selected {len(selected)} lattice points at N={N}"
            )
        points.append(selected[0])
    tiles = "".join(
        TILE_LONG if q.n1 == p.n1 + 1 else TILE_SHORT
        for p, q in zip(points, points[1:])
    )
    return points, tiles


def ll_positions(y0, count: int) -> List[GoldenScalar]:
    """Parallel positions (x_par(0) = 0) of the LL vertices among 0..count."""
    positions = []
    x_par = ZERO
    for entry in sequence(y0, count):
        if vertex_type_y(entry.y_perp) == "LL":
            positions.append(x_par)
        if entry.tile_to_next == TILE_LONG:
            x_par = x_par + TAU
        elif entry.tile_to_next == TILE_SHORT:
            x_par = x_par + ONE
    return positions
