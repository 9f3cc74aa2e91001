import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from src import density, icosa
from src.errors import GeometryError
from src.golden import ONE, TAU_FLOAT, ZERO, GoldenScalar
from src.icosa import ModuleVector6, Vec3

E = ModuleVector6.unit


@pytest.fixture(scope="module")
def rt():
    return icosa.triacontahedron()


def test_basis_vectors_are_unit_length():
    for space in icosa.SPACES:
        for v in icosa.basis(space):
            assert v.length == pytest.approx(1.0)


def test_basis_angles():
    par = icosa.basis(icosa.PARALLEL)
    perp = icosa.basis(icosa.PERPENDICULAR)
    for i, j in itertools.combinations(range(6), 2):
        assert abs(par[i].dot(par[j])) == pytest.approx(1 / math.sqrt(5))
        assert abs(perp[i].dot(perp[j])) == pytest.approx(1 / math.sqrt(5))
    assert par[0].dot(par[1]) > 0
    assert perp[0].dot(perp[1]) < 0


def test_unknown_space():
    with pytest.raises(GeometryError):
        icosa.basis("sideways")


def test_module_vector_needs_six_indices():
    with pytest.raises(GeometryError):
        ModuleVector6((1, 2, 3))


def test_lift_recovers_indices():
    rng = np.random.default_rng(7)
    for _ in range(200):
        v = ModuleVector6(tuple(rng.integers(-4, 5, size=6)))
        assert icosa.lift(*icosa.star_map(v)) == v


def test_lift_rejects_off_lattice_pairs():
    v_par, v_perp = icosa.star_map(E(1))
    moved = Vec3(v_par.x + 0.1, v_par.y, v_par.z)
    with pytest.raises(GeometryError):
        icosa.lift(moved, v_perp)


def test_triacontahedron_vertices(rt):
    assert len(rt.vertices) == 32
    assert len(rt.five_fold_vertices) == 12
    assert len(rt.three_fold_vertices) == 20
    assert rt.contains(np.array([0.0, 0.0, TAU_FLOAT]))
    assert not rt.contains(np.array([0.0, 0.0, TAU_FLOAT + 1e-3]))


def test_central_section_is_a_decagon(rt):
    section = rt.section(ZERO)
    assert section.vertex_count == 10
    assert section.area == pytest.approx(density.F(ZERO).value, abs=1e-9)


def _eta_samples():
    samples = [Fraction(k, 60) for k in range(-59, 60)]
    for b in density.BREAKPOINTS:
        samples.extend([b, -b])
        for offset in (Fraction(1, 10**6), -Fraction(1, 10**6)):
            samples.append(b + offset)
    return samples


@pytest.mark.parametrize("eta", _eta_samples(), ids=str)
def test_section_area_matches_closed_form(rt, eta):
    section = rt.section(eta)
    assert section.area == pytest.approx(density.F(eta).value, abs=1e-9)


def test_section_at_the_poles_is_a_point(rt):
    assert rt.section(ONE).vertex_count == 1
    assert rt.section(-ONE).area == 0.0


def test_section_outside_raises(rt):
    with pytest.raises(GeometryError):
        rt.section(GoldenScalar(Fraction(101, 100), 0))


def test_section_in_angstrom(rt):
    section = rt.section(ZERO)
    scaled = section.to_angstrom(4.56)
    assert np.allclose(scaled, section.vertices * TAU_FLOAT * 4.56)


def test_prism_membership(rt):
    assert icosa.prism_membership(np.zeros(3), rt) == {1, 2, 3, 4, 5, 6}
    assert rt.prism_membership(np.array([0.0, 0.0, TAU_FLOAT])) == set()
    with pytest.raises(GeometryError):
        rt.prism_membership(np.array([0.0, 0.0, 2.0]))


def test_tiling_vertex_selection(rt):
    assert icosa.is_tiling_vertex(ModuleVector6((0,) * 6), rt)
    # odd index sum
    assert not icosa.is_tiling_vertex(E(1), rt)
    # v_perp of 2 e1 lies at distance 2 > tau along the 5fold axis
    assert not icosa.is_tiling_vertex(2 * E(1), rt)


def test_in_plane_shift_of_first_patterson_vector():
    shift = icosa.in_plane_shift(E(2) - E(4))
    v_par, _ = icosa.star_map(E(2) - E(4))
    assert v_par.z == pytest.approx(0.0, abs=1e-12)
    # |v_par| = tau * b2 and |v_perp| = b2
    assert v_par.length == pytest.approx(TAU_FLOAT * icosa.B2)
    assert float(np.hypot(*shift)) == pytest.approx(icosa.B2 / TAU_FLOAT)
    assert v_par.length * 4.56 == pytest.approx(7.758, abs=1e-3)


def test_in_plane_shift_rejects_axial_vectors():
    with pytest.raises(GeometryError):
        icosa.in_plane_shift(E(1))
    with pytest.raises(GeometryError):
        icosa.in_plane_shift(E(2))


def test_two_fold_axes():
    axis_2, axis_2_prime = icosa.two_fold_axes()
    assert axis_2.angle == pytest.approx(58.28, abs=0.01)
    assert axis_2_prime.angle == pytest.approx(31.72, abs=0.01)
    assert axis_2.direction @ axis_2_prime.direction == pytest.approx(
        0.0, abs=1e-12
    )
    assert axis_2.short_length == pytest.approx(TAU_FLOAT * icosa.B2)


def test_plane_spacings_from_two_fold_axes():
    axis_2, axis_2_prime = icosa.two_fold_axes()
    short, long = icosa.plane_spacing_from_two_fold(axis_2)
    assert short == pytest.approx(0.894, abs=1e-3)
    assert long == pytest.approx(1.447, abs=1e-3)
    short_prime, long_prime = icosa.plane_spacing_from_two_fold(axis_2_prime)
    assert short_prime == pytest.approx(TAU_FLOAT * short)
    assert long_prime == pytest.approx(TAU_FLOAT * long)


def test_rotate_in_plane():
    rotated = icosa.rotate_in_plane([[1.0, 0.0]], math.pi / 2)
    assert np.allclose(np.abs(rotated), [[0.0, 1.0]])


def test_oracle_samples_at_least_a_hundred_heights():
    assert len(_eta_samples()) >= 100


@pytest.mark.parametrize("eta", [ZERO, Fraction(1, 10), Fraction(3, 10),
                                 Fraction(-6, 10), Fraction(9, 10)])
def test_section_is_invariant_under_five_fold_rotation(rt, eta):
    vertices = rt.section(eta).vertices
    rotated = icosa.rotate_in_plane(vertices, 2 * math.pi / 5)
    distances = np.linalg.norm(
        rotated[:, None, :] - vertices[None, :, :], axis=2
    )
    assert distances.min(axis=1).max() < 1e-9


def test_vertex_count_changes_at_the_breakpoints(rt):
    b1, b2, b3 = (float(b) for b in density.BREAKPOINTS)
    midpoints = [b1 / 2, (b1 + b2) / 2, (b2 + b3) / 2, (b3 + 1) / 2]
    counts = [
        rt.section(GoldenScalar(Fraction(m).limit_denominator(10**9), 0))
        .vertex_count
        for m in midpoints
    ]
    assert counts == [10, 15, 10, 5]
    for b, before, after in zip(density.BREAKPOINTS, counts, counts[1:]):
        offset = Fraction(1, 10**6)
        assert rt.section(b - offset).vertex_count == before
        assert rt.section(b + offset).vertex_count == after


def test_prism_boundary_belongs_to_every_prism(rt):
    boundary = 1.0 / (TAU_FLOAT + 2.0)
    assert rt.prism_membership(np.array([0.0, 0.0, boundary])) == {
        1, 2, 3, 4, 5, 6,
    }
    above = rt.prism_membership(np.array([0.0, 0.0, boundary + 1e-6]))
    assert above == {2, 3, 4, 5, 6}


def test_cap_near_the_five_fold_vertex_is_outside_every_prism(rt):
    cap = np.array([0.0, 0.0, 0.99 * TAU_FLOAT])
    assert rt.contains(cap)
    assert rt.prism_membership(cap) == set()
