import math

import numpy as np
import pytest

from src import polygon

SQUARE = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]


def regular(n, radius=1.0):
    angles = 2.0 * math.pi * np.arange(n) / n
    return np.column_stack([radius * np.cos(angles), radius * np.sin(angles)])


def test_shoelace_orientation():
    assert polygon.signed_area(SQUARE) == pytest.approx(1.0)
    assert polygon.signed_area(SQUARE[::-1]) == pytest.approx(-1.0)
    assert polygon.area(SQUARE[::-1]) == pytest.approx(1.0)


def test_degenerate_polygons_have_no_area():
    assert polygon.area([[0.0, 0.0], [1.0, 1.0]]) == 0.0
    assert polygon.area([]) == 0.0


def test_regular_polygon_area():
    hexagon = regular(6)
    assert polygon.area(hexagon) == pytest.approx(1.5 * math.sqrt(3.0))


def test_clip_halfplane():
    clipped = polygon.clip_halfplane(SQUARE, [1.0, 0.0], 0.5)
    assert polygon.area(clipped) == pytest.approx(0.5)
    assert clipped[:, 0].max() == pytest.approx(0.5)


def test_clip_keeps_everything_or_nothing():
    kept = polygon.clip_halfplane(SQUARE, [1.0, 0.0], 2.0)
    assert polygon.area(kept) == pytest.approx(1.0)
    gone = polygon.clip_halfplane(SQUARE, [1.0, 0.0], -1.0)
    assert len(gone) == 0


def test_intersection_of_shifted_squares():
    moved = np.asarray(SQUARE) + [0.5, 0.5]
    assert polygon.overlap_area(SQUARE, moved) == pytest.approx(0.25)


def test_disjoint_and_touching_squares():
    assert polygon.overlap_area(SQUARE, np.asarray(SQUARE) + [3.0, 0.0]) == 0
    touching = polygon.overlap_area(SQUARE, np.asarray(SQUARE) + [1.0, 0.0])
    assert touching == pytest.approx(0.0, abs=1e-12)


def test_overlap_is_symmetric_and_bounded():
    a = regular(10)
    b = regular(5, 1.3) + [0.2, -0.1]
    ab = polygon.overlap_area(a, b)
    assert ab == pytest.approx(polygon.overlap_area(b, a), abs=1e-12)
    assert ab <= min(polygon.area(a), polygon.area(b)) + 1e-12


def test_overlap_decreases_along_a_ray():
    decagon = regular(10)
    direction = np.array([math.cos(0.3), math.sin(0.3)])
    values = [
        polygon.overlap_area(decagon, decagon + t * direction)
        for t in np.linspace(0.0, 2.0, 21)
    ]
    assert values[0] == pytest.approx(polygon.area(decagon))
    assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))
    assert values[-1] == pytest.approx(0.0, abs=1e-9)


def test_drop_collinear_and_dedupe():
    points = [
        [0.0, 0.0], [0.5, 0.0], [1.0, 0.0], [1.0, 1.0], [1.0, 1.0],
        [0.0, 1.0],
    ]
    cleaned = polygon.drop_collinear(points)
    assert len(cleaned) == 4
    assert polygon.area(cleaned) == pytest.approx(1.0)


def test_contains_mask():
    mask = polygon.contains(SQUARE, [[0.5, 0.5], [1.5, 0.5], [1.0, 1.0]])
    assert mask.tolist() == [True, False, True]


def test_diameter():
    assert polygon.diameter(SQUARE) == pytest.approx(math.sqrt(2.0))
    assert polygon.diameter([[1.0, 2.0]]) == 0.0
