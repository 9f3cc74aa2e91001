#!/usr/bin/env python3
"""
Planar densities from the exact section area F(eta).

F(eta) is the area of the triacontahedron section at height eta * tau * b5,
measured in (tau * b5)**2. It is a piecewise quadratic in |eta| with
breakpoints tau^-1/(tau+2), tau/(tau+2) and tau^2/(tau+2). Values are
carried as an exact coefficient of the irrational unit (tau+2)**(-3/2).
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from src.errors import GeometryError, TerraceModelError
from src.golden import (
    ONE,
    TAU,
    TAU_FLOAT,
    TAU_INV,
    ZERO,
    GoldenScalar,
    to_float,
)
from src.icosa import B5_ANGSTROM

logger = logging.getLogger(__name__)

AREA_UNIT = (TAU_FLOAT + 2.0) ** -1.5

BREAKPOINT_1 = TAU_INV / (TAU + 2)
BREAKPOINT_2 = TAU / (TAU + 2)
BREAKPOINT_3 = TAU * TAU / (TAU + 2)
BREAKPOINTS = (BREAKPOINT_1, BREAKPOINT_2, BREAKPOINT_3)

# highest |eta| reached by a Fibonacci sequence of planes
ETA_MAX_FIBONACCI = BREAKPOINT_3

# ratio of the large-pentagon vertex density to the vertex density
PENTAGON_VERTEX_RATIO = (7 * TAU + 4) / TAU**3
FACE_PENTAGON_VERTICES = 5

VERTEX = "vertex"
BERGMAN_FACE_CENTER = "bergman_face_center"
BERGMAN_FACE_VERTEX = "bergman_face_vertex"
CUT_PENTAGON_CENTER = "cut_pentagon_center"
CUT_PENTAGON_VERTEX = "cut_pentagon_vertex"
PROVENANCES = (
    VERTEX,
    BERGMAN_FACE_CENTER,
    BERGMAN_FACE_VERTEX,
    CUT_PENTAGON_CENTER,
    CUT_PENTAGON_VERTEX,
)


@dataclass(frozen=True)
class AreaValue:
    """coeff * (tau+2)**(-3/2), in units of (tau*b5)**2."""

    coeff: GoldenScalar

    def __post_init__(self):
        if self.coeff.sign() < 0:
            raise GeometryError(f"negative area coefficient {self.coeff!r}")

    @property
    def value(self) -> float:
        return to_float(self.coeff) * AREA_UNIT

    def __float__(self):
        return self.value

    def __truediv__(self, other: "AreaValue") -> GoldenScalar:
        """Exact ratio of two areas (the irrational unit cancels)."""
        return self.coeff / other.coeff


@dataclass(frozen=True)
class DensityValue:
    value: float
    provenance: str = VERTEX
    units: str = "1/A^2"

    def __post_init__(self):
        if self.value < 0:
            raise TerraceModelError(f"negative density {self.value}")


def _check_eta(eta) -> GoldenScalar:
    eta = GoldenScalar.coerce(eta)
    if (abs(eta) - ONE).sign() > 0:
        raise GeometryError(
            f"|eta|={to_float(abs(eta)):.6f} > 1 lies outside the"
            " triacontahedron"
        )
    return eta


def F(eta) -> AreaValue:
    """
    Exact section area F(eta) for -1 <= eta <= 1.

    Raises:
        GeometryError: If |eta| > 1
    """
    x = abs(_check_eta(eta))
    t2 = TAU + 2
    if x <= BREAKPOINT_1:
        coeff = 10 * TAU
    elif x <= BREAKPOINT_2:
        coeff = 10 * TAU - 5 * t2 * t2 / TAU * (x - BREAKPOINT_1) ** 2
    elif x <= BREAKPOINT_3:
        coeff = (
            10
            + 5 * t2 * t2 / TAU * (BREAKPOINT_3 - x) ** 2
            - 5 * t2 * t2 * (x - BREAKPOINT_2) ** 2
        )
    else:
        coeff = 5 * t2 * t2 * (ONE - x) ** 2
    return AreaValue(coeff)


def branch_coefficients(eta) -> Tuple[GoldenScalar, ...]:
    """Coefficients of all four closed-form branches evaluated at |eta|."""
    x = abs(GoldenScalar.coerce(eta))
    t2 = TAU + 2
    return (
        10 * TAU,
        10 * TAU - 5 * t2 * t2 / TAU * (x - BREAKPOINT_1) ** 2,
        10
        + 5 * t2 * t2 / TAU * (BREAKPOINT_3 - x) ** 2
        - 5 * t2 * t2 * (x - BREAKPOINT_2) ** 2,
        5 * t2 * t2 * (ONE - x) ** 2,
    )


F_MAX = F(ZERO)


def D_relative(eta) -> float:
    """D(eta)/D(0) = F(eta)/F(0), in [0, 1]."""
    return to_float(F(eta) / F_MAX)


def D_relative_exact(eta) -> GoldenScalar:
    return F(eta) / F_MAX


def minimum_relative_density() -> GoldenScalar:
    """Lowest relative density in a Fibonacci sequence of planes, 1/(2 tau)."""
    return D_relative_exact(ETA_MAX_FIBONACCI)


def short_edge(b5_angstrom: float = B5_ANGSTROM) -> float:
    """tau-scaled short tiling edge s = tau * b2, in A."""
    return TAU_FLOAT * 2.0 / math.sqrt(TAU_FLOAT + 2.0) * b5_angstrom


def D0(b5_angstrom: float = B5_ANGSTROM) -> float:
    """
    Vertex density of the densest (triangle-tiled) planes, in 1/A^2.

    Each triangle carries weight 1/2; large and small triangles have areas
    f1 = s^2 tau sqrt(tau+2)/4 and f1/tau, frequencies in ratio tau.
    """
    s = short_edge(b5_angstrom)
    f1 = s * s * TAU_FLOAT / 4.0 * math.sqrt(TAU_FLOAT + 2.0)
    return TAU_FLOAT**3 / (TAU_FLOAT + 2.0) / (2.0 * f1)


def D_absolute(
    eta, kind: str = VERTEX, b5_angstrom: float = B5_ANGSTROM
) -> DensityValue:
    """
    Absolute planar density for a kind of atomic position.

    Centers (vertices, Bergman face centers, cut pentagon centers) all scale
    as D(0) F(eta)/F(0). Face pentagon vertices count 5 per center; cut
    pentagon vertices are shared and use the ratio (7 tau + 4)/tau^3.

    Raises:
        TerraceModelError: If kind is unknown
        GeometryError: If |eta| > 1
    """
    if kind not in PROVENANCES:
        raise TerraceModelError(
            f"unknown density kind {kind!r}; expected one of {PROVENANCES}"
        )
    value = D0(b5_angstrom) * D_relative(eta)
    if kind == BERGMAN_FACE_VERTEX:
        value *= FACE_PENTAGON_VERTICES
    elif kind == CUT_PENTAGON_VERTEX:
        value *= to_float(PENTAGON_VERTEX_RATIO)
    return DensityValue(value, kind)


def equivalent_triangle_edge(d) -> float:
    """
    Edge length t of an equilateral triangle tiling with density d,
    from d = 2 / (sqrt(3) t^2).

    Raises:
        TerraceModelError: If d <= 0
    """
    value = d.value if isinstance(d, DensityValue) else float(d)
    if value <= 0:
        raise TerraceModelError(f"density must be positive, got {value}")
    return math.sqrt(2.0 / (math.sqrt(3.0) * value))
