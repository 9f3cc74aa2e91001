import math
import random
from fractions import Fraction

import pytest

from src.errors import ConfigError
from src.golden import (
    HALF,
    ONE,
    TAU,
    TAU_CUBED,
    TAU_FLOAT,
    TAU_INV,
    ZERO,
    GoldenScalar,
    approximate,
    div,
    field_norm,
    galois_conjugate,
    in_half_open,
    parse_golden,
    sign,
    to_float,
)


def random_scalar(rng: random.Random) -> GoldenScalar:
    return GoldenScalar(
        Fraction(rng.randint(-50, 50), rng.randint(1, 12)),
        Fraction(rng.randint(-50, 50), rng.randint(1, 12)),
    )


def test_tau_squared_is_tau_plus_one():
    assert TAU * TAU == TAU + 1
    assert TAU * TAU_INV == ONE
    assert TAU_CUBED == 2 * TAU + 1


def test_reciprocal_of_tau_plus_two():
    x = 1 / (TAU + 2)
    assert x * (TAU + 2) == ONE
    assert to_float(x) == pytest.approx(1 / (TAU_FLOAT + 2), abs=1e-15)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        div(ONE, ZERO)


def test_sign_of_near_cancelling_values():
    # tau - 1.618 > 0 and tau - 1.6181 < 0
    assert (TAU - Fraction(1618, 1000)).sign() == 1
    assert (TAU - Fraction(16181, 10000)).sign() == -1
    assert sign(ZERO) == 0
    # tau^-10 is tiny but positive
    assert (TAU_INV**10).sign() == 1


def test_conjugate_and_norm():
    assert galois_conjugate(TAU) == 1 - TAU
    assert field_norm(TAU) == -1
    assert field_norm(GoldenScalar(3, 0)) == 9


def test_half_open_membership():
    lo, hi = -TAU_CUBED / 2, TAU_CUBED / 2
    assert in_half_open(hi, lo, hi)
    assert not in_half_open(lo, lo, hi)
    assert in_half_open(ZERO, lo, hi)


def test_parse_golden_expressions():
    assert parse_golden("-1/(tau*(tau+2))") == -TAU_INV / (TAU + 2)
    assert parse_golden("tau") == TAU
    assert parse_golden("  (2*tau+1)/(tau+2) ") == (2 * TAU + 1) / (TAU + 2)
    assert parse_golden("-1/2") == -HALF


@pytest.mark.parametrize(
    "expression", ["0.5", "tau**2", "phi", "1/(tau-tau)", "__import__('os')"]
)
def test_parse_golden_rejects(expression):
    with pytest.raises(ConfigError):
        parse_golden(expression)


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        GoldenScalar(0.5, 0)


def test_approximate_from_float():
    assert approximate(0.25) == GoldenScalar(Fraction(1, 4), 0)
    assert approximate(TAU) is TAU


def test_field_identities_randomized():
    rng = random.Random(1234)
    for _ in range(10_000):
        x, y, z = (random_scalar(rng) for _ in range(3))
        assert (x + y) * z == x * z + y * z
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x * y).norm() == x.norm() * y.norm()
        if y:
            assert (x / y) * y == x
        expected = to_float(x) - to_float(y)
        if abs(expected) > 1e-9:
            assert (x - y).sign() == (1 if expected > 0 else -1)
            assert (x > y) == (expected > 0)


def test_to_float_matches_definition():
    x = GoldenScalar(Fraction(-7, 3), Fraction(5, 4))
    assert to_float(x) == pytest.approx(-7 / 3 + 5 / 4 * TAU_FLOAT, rel=1e-12)
    assert float(x) == to_float(x)
    assert math.isclose(to_float(TAU_CUBED), TAU_FLOAT**3, rel_tol=1e-12)
