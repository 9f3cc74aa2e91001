#!/usr/bin/env python3
"""
Convex polygon kernels: half-plane clipping, pairwise intersection and
shoelace area. Polygons are (n, 2) float arrays in counterclockwise order.
"""

import numpy as np

TOLERANCE = 1e-12


def as_polygon(vertices) -> np.ndarray:
    polygon = np.asarray(vertices, dtype=float).reshape(-1, 2)
    return polygon


def signed_area(polygon) -> float:
    """Shoelace area; positive for counterclockwise order."""
    polygon = as_polygon(polygon)
    if len(polygon) < 3:
        return 0.0
    x, y = polygon[:, 0], polygon[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def area(polygon) -> float:
    return abs(signed_area(polygon))


def dedupe(polygon, tol: float = 1e-10) -> np.ndarray:
    """Drop consecutive (and wrap-around) vertices closer than tol."""
    polygon = as_polygon(polygon)
    kept = []
    for p in polygon:
        if not kept or np.hypot(*(p - kept[-1])) > tol:
            kept.append(p)
    while len(kept) > 1 and np.hypot(*(kept[0] - kept[-1])) <= tol:
        kept.pop()
    return np.array(kept).reshape(-1, 2)


def drop_collinear(polygon, tol: float = 1e-10) -> np.ndarray:
    """Remove vertices lying on the segment between their neighbours."""
    polygon = dedupe(polygon, tol)
    changed = True
    while changed and len(polygon) > 2:
        changed = False
        n = len(polygon)
        for i in range(n):
            prev_pt, pt = polygon[i - 1], polygon[i]
            next_pt = polygon[(i + 1) % n]
            u, v = pt - prev_pt, next_pt - pt
            cross = u[0] * v[1] - u[1] * v[0]
            scale = max(np.hypot(*u) * np.hypot(*v), tol)
            if abs(cross) / scale <= tol:
                polygon = np.delete(polygon, i, axis=0)
                changed = True
                break
    return polygon


def clip_halfplane(polygon, normal, offset: float) -> np.ndarray:
    """
    Keep the part of a convex polygon with normal . p <= offset.

    One Sutherland-Hodgman pass against a single edge line.
    """
    polygon = as_polygon(polygon)
    if len(polygon) == 0:
        return polygon
    normal = np.asarray(normal, dtype=float)
    values = polygon @ normal - offset
    output = []
    n = len(polygon)
    for i in range(n):
        s, e = polygon[i - 1], polygon[i]
        vs, ve = values[i - 1], values[i]
        if ve <= TOLERANCE:
            if vs > TOLERANCE:
                output.append(s + (e - s) * (vs / (vs - ve)))
            output.append(e)
        elif vs <= TOLERANCE:
            if vs < -TOLERANCE:
                output.append(s + (e - s) * (vs / (vs - ve)))
    return as_polygon(output)


def edge_halfplanes(polygon):
    """(normal, offset) pairs describing a counterclockwise convex polygon."""
    polygon = as_polygon(polygon)
    planes = []
    for p, q in zip(polygon, np.roll(polygon, -1, axis=0)):
        d = q - p
        normal = np.array([d[1], -d[0]])
        planes.append((normal, float(normal @ p)))
    return planes


def intersect_convex(subject, clip) -> np.ndarray:
    """Intersection of two convex counterclockwise polygons."""
    result = as_polygon(subject)
    clip = as_polygon(clip)
    if len(clip) < 3:
        return as_polygon([])
    for normal, offset in edge_halfplanes(clip):
        if len(result) == 0:
            break
        result = clip_halfplane(result, normal, offset)
    return dedupe(result)


def overlap_area(subject, clip) -> float:
    return area(intersect_convex(subject, clip))


def contains(polygon, points, tol: float = 0.0) -> np.ndarray:
    """Boolean mask of points inside a convex counterclockwise polygon."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    inside = np.ones(len(points), dtype=bool)
    for normal, offset in edge_halfplanes(polygon):
        inside &= points @ normal <= offset + tol * np.hypot(*normal)
    return inside


def diameter(polygon) -> float:
    polygon = as_polygon(polygon)
    if len(polygon) < 2:
        return 0.0
    diffs = polygon[:, None, :] - polygon[None, :, :]
    return float(np.sqrt((diffs**2).sum(axis=-1)).max())
