from fractions import Fraction

import pytest

from src import density, terraces
from src.errors import GeometryError, TerraceModelError
from src.golden import ONE, TAU, ZERO, GoldenScalar, to_float


def test_area_constants():
    assert density.F(ZERO).value == pytest.approx(2.3511, abs=1e-4)
    assert density.F(density.BREAKPOINT_2).value == pytest.approx(
        1.9021, abs=1e-4
    )
    assert density.F(density.BREAKPOINT_3).value == pytest.approx(
        0.7265, abs=1e-4
    )
    assert density.F(ONE).value == 0.0
    assert to_float(density.ETA_MAX_FIBONACCI) == pytest.approx(
        0.7236, abs=1e-4
    )


def test_branches_meet_at_breakpoints():
    for k, b in enumerate(density.BREAKPOINTS):
        coefficients = density.branch_coefficients(b)
        assert coefficients[k] == coefficients[k + 1]
        assert density.F(b).coeff == coefficients[k]


def test_area_is_even():
    for k in range(0, 41):
        eta = GoldenScalar(Fraction(k, 40), 0)
        assert density.F(eta).coeff == density.F(-eta).coeff


def test_area_is_nonincreasing_in_magnitude():
    values = [density.F(Fraction(k, 200)).value for k in range(201)]
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_plateau_up_to_first_breakpoint():
    assert density.F(density.BREAKPOINT_1).coeff == 10 * TAU
    assert density.F(Fraction(1, 10)).coeff == 10 * TAU


def test_outside_the_triacontahedron():
    with pytest.raises(GeometryError):
        density.F(Fraction(11, 10))


def test_minimum_relative_density_is_exact():
    assert density.minimum_relative_density() == 1 / (2 * TAU)
    assert to_float(density.minimum_relative_density()) == pytest.approx(
        0.3090, abs=1e-4
    )


def test_area_ratio_is_exact():
    ratio = density.F(density.BREAKPOINT_2) / density.F_MAX
    # (10 + 5/tau) / (10 tau)
    assert ratio == (10 + 5 / TAU) / (10 * TAU)


def test_relative_density_range():
    assert density.D_relative(ZERO) == 1.0
    assert density.D_relative(ONE) == 0.0
    assert 0.0 < density.D_relative(Fraction(1, 2)) < 1.0


def test_pentagon_vertex_ratio():
    assert to_float(density.PENTAGON_VERTEX_RATIO) == pytest.approx(
        3.6180, abs=1e-4
    )
    # equals tau + 2
    assert density.PENTAGON_VERTEX_RATIO == TAU + 2


def test_densest_plane_density():
    assert density.D0() == pytest.approx(0.0126, abs=1e-4)
    assert density.short_edge() == pytest.approx(7.758, abs=1e-3)


def test_equivalent_triangle_edge():
    t = density.equivalent_triangle_edge(density.D0())
    assert t == pytest.approx(9.56, abs=0.01)
    with pytest.raises(TerraceModelError):
        density.equivalent_triangle_edge(0.0)


def test_density_scales_with_basis_length():
    assert density.D0(2 * 4.56) == pytest.approx(density.D0(4.56) / 4)


def test_absolute_densities_by_kind():
    eta = Fraction(1, 2)
    center = density.D_absolute(eta, density.BERGMAN_FACE_CENTER).value
    assert density.D_absolute(eta).value == pytest.approx(center)
    assert density.D_absolute(
        eta, density.BERGMAN_FACE_VERTEX
    ).value == pytest.approx(5 * center)
    assert density.D_absolute(
        eta, density.CUT_PENTAGON_VERTEX
    ).value == pytest.approx(to_float(TAU + 2) * center)


def test_bergman_face_density_of_plane_16():
    records = terraces.plane_sequence(count=16)
    value = density.D_absolute(records[16].eta2, density.BERGMAN_FACE_CENTER)
    assert value.provenance == density.BERGMAN_FACE_CENTER
    assert value.value == pytest.approx(6.9e-3, abs=0.15e-3)


def test_unknown_density_kind():
    with pytest.raises(TerraceModelError):
        density.D_absolute(ZERO, "interstitial")


def test_negative_values_are_rejected():
    with pytest.raises(TerraceModelError):
        density.DensityValue(-1.0)
    with pytest.raises(GeometryError):
        density.AreaValue(GoldenScalar(-1, 0))
