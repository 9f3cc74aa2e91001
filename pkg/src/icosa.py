#!/usr/bin/env python3
"""
Icosahedral module geometry.

Six basis vectors e1..e6 of the hypercubic lattice project to 5fold axes in
the parallel space E_par and the perpendicular space E_perp. The frame puts
e1 on the third coordinate axis in both spaces; e2..e6 make the angle
arccos(+-1/sqrt(5)) with e1 and follow each other by rotations of 2pi/5
(E_par) or 4pi/5 (E_perp). Lengths are in units of b5, the projected basis
length.

The vertex window is the rhombic triacontahedron spanned by the e_i in
E_perp, with its 5fold vertex at distance tau. Sections perpendicular to e1
at height eta * tau are returned in in-plane units of tau * b5, so that
their area is directly comparable with the closed-form F(eta).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Set, Tuple

import numpy as np

from src import polygon
from src.errors import GeometryError
from src.golden import ONE, TAU_FLOAT, GoldenScalar, to_float

logger = logging.getLogger(__name__)

PARALLEL = "parallel"
PERPENDICULAR = "perpendicular"
SPACES = (PARALLEL, PERPENDICULAR)

GEOMETRY_TOLERANCE = 1e-9

B5_ANGSTROM = 4.56
# short 2fold length in units of b5
B2 = 2.0 / math.sqrt(TAU_FLOAT + 2.0)
# half thickness of the central decagonal prism, units of b5
PRISM_HALF_THICKNESS = 1.0 / (TAU_FLOAT + 2.0)


@dataclass(frozen=True)
class ModuleVector6:
    """Integer indices n1..n6 of a point of the hypercubic lattice."""

    n: Tuple[int, int, int, int, int, int]

    def __post_init__(self):
        n = tuple(int(k) for k in self.n)
        if len(n) != 6:
            raise GeometryError(f"module vectors need 6 indices, got {len(n)}")
        object.__setattr__(self, "n", n)

    @classmethod
    def unit(cls, i: int) -> "ModuleVector6":
        """Basis vector e_i, i = 1..6."""
        n = [0] * 6
        n[i - 1] = 1
        return cls(tuple(n))

    @property
    def parity(self) -> int:
        return sum(self.n) % 2

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    def __add__(self, other: "ModuleVector6") -> "ModuleVector6":
        return ModuleVector6(tuple(a + b for a, b in zip(self.n, other.n)))

    def __sub__(self, other: "ModuleVector6") -> "ModuleVector6":
        return ModuleVector6(tuple(a - b for a, b in zip(self.n, other.n)))

    def __neg__(self) -> "ModuleVector6":
        return ModuleVector6(tuple(-a for a in self.n))

    def __rmul__(self, k: int) -> "ModuleVector6":
        return ModuleVector6(tuple(k * a for a in self.n))


@dataclass(frozen=True)
class Vec3:
    x: float
    y: float
    z: float
    space: str = PARALLEL

    @classmethod
    def from_array(cls, values, space: str = PARALLEL) -> "Vec3":
        x, y, z = (float(v) for v in values)
        return cls(x, y, z, space)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def dot(self, other: "Vec3") -> float:
        return float(self.as_array() @ other.as_array())

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.as_array()))


def _basis_matrix(space: str) -> np.ndarray:
    if space not in SPACES:
        raise GeometryError(f"unknown space {space!r}")
    cos_axis = 1.0 / math.sqrt(5.0)
    turn = 2.0 * math.pi / 5.0
    if space == PERPENDICULAR:
        cos_axis = -cos_axis
        turn = 2.0 * turn
    sin_axis = math.sqrt(1.0 - cos_axis**2)
    columns = [np.array([0.0, 0.0, 1.0])]
    for k in range(5):
        phi = k * turn
        columns.append(
            np.array(
                [sin_axis * math.cos(phi), sin_axis * math.sin(phi), cos_axis]
            )
        )
    return np.column_stack(columns)


PARALLEL_MATRIX = _basis_matrix(PARALLEL)
PERPENDICULAR_MATRIX = _basis_matrix(PERPENDICULAR)
AXIS = np.array([0.0, 0.0, 1.0])


def basis(space: str) -> List[Vec3]:
    """Projected basis vectors e1..e6 in the requested space."""
    matrix = _basis_matrix(space)
    return [Vec3.from_array(matrix[:, i], space) for i in range(6)]


def star_map(v: ModuleVector6) -> Tuple[Vec3, Vec3]:
    """Parallel and perpendicular projections of a module vector."""
    n = np.array(v.n, dtype=float)
    return (
        Vec3.from_array(PARALLEL_MATRIX @ n, PARALLEL),
        Vec3.from_array(PERPENDICULAR_MATRIX @ n, PERPENDICULAR),
    )


def lift(v_par: Vec3, v_perp: Vec3) -> ModuleVector6:
    """
    Inverse of star_map: recover the integer indices of a module point.

    The stacked projection matrix satisfies M M^T = 2 I, so the lift is
    M^T (v_par, v_perp) / 2.

    Raises:
        GeometryError: If the pair is not the projection of a lattice point
    """
    stacked = np.concatenate([v_par.as_array(), v_perp.as_array()])
    matrix = np.vstack([PARALLEL_MATRIX, PERPENDICULAR_MATRIX])
    n = matrix.T @ stacked / 2.0
    rounded = np.rint(n)
    if np.abs(n - rounded).max() > 1e-6:
        raise GeometryError(f"pair does not lift to the lattice: {n}")
    return ModuleVector6(tuple(int(k) for k in rounded))


def angle_to_axis(v: ModuleVector6) -> float:
    """Angle in degrees between the line of v_par and the 5fold axis."""
    v_par, _ = star_map(v)
    cosine = abs(v_par.z) / v_par.length
    return math.degrees(math.acos(min(1.0, cosine)))


@dataclass(frozen=True, eq=False)
class SectionPolygon:
    """Planar section perpendicular to e1; vertices in units of tau*b5."""

    eta: GoldenScalar
    vertices: np.ndarray

    @property
    def area(self) -> float:
        return polygon.area(self.vertices)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def to_angstrom(self, b5_angstrom: float = B5_ANGSTROM) -> np.ndarray:
        return self.vertices * TAU_FLOAT * b5_angstrom


class Triacontahedron:
    """
    Rhombic triacontahedron as the intersection of 30 half-spaces.

    Face normals run along the 15 2fold directions e_i x e_j of E_perp with
    both orientations; the common support distance is calibrated so that
    the 5fold vertex on the e1 axis lies at distance tau.
    """

    def __init__(self):
        generators = PERPENDICULAR_MATRIX.T
        normals = []
        for i, j in itertools.combinations(range(6), 2):
            normal = np.cross(generators[i], generators[j])
            normal /= np.linalg.norm(normal)
            normals.extend([normal, -normal])
        self.normals = np.array(normals)
        self.support = TAU_FLOAT * float(np.max(self.normals @ AXIS))
        self.vertices = self._derive_vertices()
        logger.debug(
            f"Triacontahedron built: {len(self.normals)} faces,"
            f" {len(self.vertices)} vertices, support={self.support:.12f}"
        )

    def _derive_vertices(self) -> np.ndarray:
        found = []
        for a, b, c in itertools.combinations(range(len(self.normals)), 3):
            matrix = self.normals[[a, b, c]]
            if abs(np.linalg.det(matrix)) < 1e-9:
                continue
            point = np.linalg.solve(matrix, np.full(3, self.support))
            if not self.contains(point):
                continue
            if all(np.linalg.norm(point - q) > 1e-7 for q in found):
                found.append(point)
        return np.array(found)

    def contains(self, point, tol: float = GEOMETRY_TOLERANCE) -> bool:
        point = np.asarray(
            point.as_array() if isinstance(point, Vec3) else point, dtype=float
        )
        return bool(np.all(self.normals @ point <= self.support + tol))

    @property
    def five_fold_vertices(self) -> np.ndarray:
        radii = np.linalg.norm(self.vertices, axis=1)
        return self.vertices[np.isclose(radii, TAU_FLOAT, atol=1e-7)]

    @property
    def three_fold_vertices(self) -> np.ndarray:
        radii = np.linalg.norm(self.vertices, axis=1)
        return self.vertices[~np.isclose(radii, TAU_FLOAT, atol=1e-7)]

    def section(self, eta) -> SectionPolygon:
        """
        Section by the plane at height eta * tau along e1.

        Raises:
            GeometryError: If |eta| > 1
        """
        eta = GoldenScalar.coerce(eta)
        excess = (abs(eta) - ONE).sign()
        if excess > 0:
            raise GeometryError(
                f"|eta|={to_float(abs(eta)):.6f} > 1: the plane misses the"
                " triacontahedron"
            )
        if excess == 0:
            return SectionPolygon(eta, np.zeros((1, 2)))

        height = to_float(eta) * TAU_FLOAT
        extent = 2.0 * TAU_FLOAT
        region = np.array(
            [[-extent, -extent], [extent, -extent], [extent, extent],
             [-extent, extent]]
        )
        for normal in self.normals:
            region = polygon.clip_halfplane(
                region, normal[:2], self.support - normal[2] * height
            )
            if len(region) == 0:
                raise GeometryError(f"empty section at eta={to_float(eta)}")
        region = polygon.drop_collinear(region)
        if polygon.signed_area(region) < 0:
            region = region[::-1]
        return SectionPolygon(eta, region / TAU_FLOAT)

    def prism_membership(self, point) -> Set[int]:
        """
        Labels (1..6) of the central decagonal prisms containing a point.

        Prism j is the slab |p . e_j| <= 1/(tau+2) around the 5fold axis
        e_j, closed toward the prism. The empty set marks a point in one of
        the 5fold vertex caps.

        Raises:
            GeometryError: If the point lies outside the triacontahedron
        """
        p = np.asarray(
            point.as_array() if isinstance(point, Vec3) else point, dtype=float
        )
        if not self.contains(p):
            raise GeometryError(f"point {p} outside the triacontahedron")
        heights = PERPENDICULAR_MATRIX.T @ p
        return {
            j + 1
            for j, h in enumerate(heights)
            if abs(h) <= PRISM_HALF_THICKNESS + GEOMETRY_TOLERANCE
        }


@lru_cache(maxsize=1)
def triacontahedron() -> Triacontahedron:
    return Triacontahedron()


def section(t: Triacontahedron, eta) -> SectionPolygon:
    return t.section(eta)


def prism_membership(p, t: Triacontahedron = None) -> Set[int]:
    return (t or triacontahedron()).prism_membership(p)


def is_tiling_vertex(v: ModuleVector6, t: Triacontahedron = None) -> bool:
    """Vertex selection: even index sum and v_perp inside the window."""
    if not v.is_even:
        return False
    _, v_perp = star_map(v)
    return (t or triacontahedron()).contains(v_perp)


def in_plane_shift(v: ModuleVector6) -> np.ndarray:
    """
    In-plane component of v_perp, units of tau*b5.

    Raises:
        GeometryError: If v_par is not parallel to the planes
    """
    v_par, v_perp = star_map(v)
    if abs(v_par.z) >= GEOMETRY_TOLERANCE:
        raise GeometryError(
            f"shift {v.n} is not plane-parallel: axial component"
            f" {v_par.z:.6g} b5"
        )
    return np.array([v_perp.x, v_perp.y]) / TAU_FLOAT


def rotate_in_plane(points: Sequence, angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.asarray(points, dtype=float) @ np.array([[c, s], [-s, c]])


@dataclass(frozen=True)
class TwoFoldAxis:
    """A 2fold axis coplanar with e1, named by its short module vector."""

    name: str
    short: ModuleVector6

    @property
    def direction(self) -> np.ndarray:
        v_par, _ = star_map(self.short)
        return v_par.as_array() / v_par.length

    @property
    def angle(self) -> float:
        return angle_to_axis(self.short)

    @property
    def short_length(self) -> float:
        return star_map(self.short)[0].length

    @property
    def long_length(self) -> float:
        return TAU_FLOAT * self.short_length


def two_fold_axes() -> List[TwoFoldAxis]:
    """
    The perpendicular pair of 2fold axes 2 and 2' in the plane of e1 and e5.

    Axis 2 makes 58.3 degrees with e1, axis 2' makes 31.7 degrees. Both
    carry vectors of length tau*b2 and tau**2*b2.
    """
    e = ModuleVector6.unit
    return [
        TwoFoldAxis("2", -(e(2) + e(3))),
        TwoFoldAxis("2'", e(1) + e(5)),
    ]


def plane_spacing_from_two_fold(axis: TwoFoldAxis) -> Tuple[float, float]:
    """Short and long plane spacings along e1 generated by an axis, in b5."""
    cosine = abs(math.cos(math.radians(axis.angle)))
    return axis.short_length * cosine, axis.long_length * cosine
