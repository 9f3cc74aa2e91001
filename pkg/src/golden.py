#!/usr/bin/env python3
"""
Exact arithmetic in the golden quadratic field Q(tau).

Every window coordinate, plane height eta and area coefficient is carried as
a GoldenScalar a + b*tau with rational a, b, so that window membership and
branch selection are decided without floating-point drift. Conversion to
float happens only at output boundaries via to_float().
"""

import ast
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from src.errors import ConfigError

TAU_FLOAT = (1.0 + math.sqrt(5.0)) / 2.0

Coercible = Union["GoldenScalar", int, Fraction]


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("bool is not a valid golden coefficient")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        f"golden coefficients must be rational, got {type(value).__name__}"
    )


@dataclass(frozen=True)
class GoldenScalar:
    """Exact element a + b*tau of Q(tau); tau**2 = tau + 1."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _to_fraction(self.a))
        object.__setattr__(self, "b", _to_fraction(self.b))

    @staticmethod
    def coerce(value: Coercible) -> "GoldenScalar":
        if isinstance(value, GoldenScalar):
            return value
        return GoldenScalar(_to_fraction(value), 0)

    # Field operations

    def __add__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + b t)(c + d t) = ac + (ad + bc) t + bd (t + 1)
        bd = self.b * other.b
        return GoldenScalar(
            self.a * other.a + bd,
            self.a * other.b + self.b * other.a + bd,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.reciprocal()

    def __neg__(self):
        return GoldenScalar(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GoldenScalar":
        """Galois conjugate, tau -> 1 - tau."""
        return GoldenScalar(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = a**2 + a*b - b**2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def reciprocal(self) -> "GoldenScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(tau)")
        c = self.conjugate()
        return GoldenScalar(c.a / n, c.b / n)

    # Order

    def sign(self) -> int:
        """Exact sign of a + b*tau, decided by rational arithmetic."""
        # a + b*tau = p + q*sqrt(5) with p = a + b/2, q = b/2
        p = self.a + self.b / 2
        q = self.b / 2
        if p >= 0 and q >= 0:
            return 0 if p == 0 and q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        # opposite signs; p**2 - 5 q**2 equals the field norm
        n = self.norm()
        if p > 0:
            return 1 if n > 0 else -1
        return 1 if n < 0 else -1

    def _cmp(self, other) -> int:
        return (self - GoldenScalar.coerce(other)).sign()

    def __eq__(self, other):
        try:
            other = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return to_float(self)

    def __str__(self):
        if self.b == 0:
            return f"{self.a}"
        if self.a == 0:
            return f"{self.b}*tau"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*tau"

    def __repr__(self):
        return f"GoldenScalar({self.a!s}, {self.b!s})"


ZERO = GoldenScalar(0, 0)
ONE = GoldenScalar(1, 0)
HALF = GoldenScalar(Fraction(1, 2), 0)
TAU = GoldenScalar(0, 1)
TAU_INV = TAU - 1
TAU_CUBED = TAU**3


def add(x: Coercible, y: Coercible) -> GoldenScalar:
    return GoldenScalar.coerce(x) + y


def sub(x: Coercible, y: Coercible) -> GoldenScalar:
    return GoldenScalar.coerce(x) - y


def mul(x: Coercible, y: Coercible) -> GoldenScalar:
    return GoldenScalar.coerce(x) * y


def div(x: Coercible, y: Coercible) -> GoldenScalar:
    """Exact quotient; raises ZeroDivisionError when y == 0."""
    return GoldenScalar.coerce(x) / y


def sign(x: Coercible) -> int:
    return GoldenScalar.coerce(x).sign()


def galois_conjugate(x: Coercible) -> GoldenScalar:
    return GoldenScalar.coerce(x).conjugate()


def field_norm(x: Coercible) -> Fraction:
    return GoldenScalar.coerce(x).norm()


def to_float(x: Coercible) -> float:
    """Nearest double to a + b*tau; output paths only."""
    x = GoldenScalar.coerce(x)
    # a + b/2 + (b/2) sqrt(5) keeps cancellation small for mixed signs
    p = x.a + x.b / 2
    q = x.b / 2
    return float(p) + float(q) * math.sqrt(5.0)


def in_half_open(x: Coercible, lo: Coercible, hi: Coercible) -> bool:
    """Exact membership lo < x <= hi."""
    x = GoldenScalar.coerce(x)
    return (x - lo).sign() > 0 and (x - hi).sign() <= 0


_BINARY_OPS = {
    ast.Add: lambda x, y: x + y,
    ast.Sub: lambda x, y: x - y,
    ast.Mult: lambda x, y: x * y,
    ast.Div: lambda x, y: x / y,
}


def parse_golden(expression: str) -> GoldenScalar:
    """
    Parse a golden-rational expression such as "-1/(tau*(tau+2))".

    Grammar: integers, the name tau, + - * /, unary minus and parentheses.
    Floats and any other syntax are rejected.

    Raises:
        ConfigError: If the expression is malformed or divides by zero
    """
    try:
        tree = ast.parse(expression.strip(), mode="eval")
    except SyntaxError as e:
        raise ConfigError(f"cannot parse expression {expression!r}: {e}")

    def evaluate(node) -> GoldenScalar:
        if isinstance(node, ast.Expression):
            return evaluate(node.body)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINARY_OPS:
            return _BINARY_OPS[type(node.op)](
                evaluate(node.left), evaluate(node.right)
            )
        if isinstance(node, ast.UnaryOp) and isinstance(
            node.op, (ast.USub, ast.UAdd)
        ):
            value = evaluate(node.operand)
            return -value if isinstance(node.op, ast.USub) else value
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int) and not isinstance(
                node.value, bool
            ):
                return GoldenScalar(node.value, 0)
            raise ConfigError(
                f"only integer literals are allowed, got {node.value!r}"
            )
        if isinstance(node, ast.Name) and node.id == "tau":
            return TAU
        raise ConfigError(
            f"unsupported syntax in expression {expression!r}:"
            f" {type(node).__name__}"
        )

    try:
        return evaluate(tree)
    except ZeroDivisionError:
        raise ConfigError(f"division by zero in expression {expression!r}")


def approximate(value, max_denominator: int = 10**12) -> GoldenScalar:
    """Rational GoldenScalar closest to a float; for sampled grids only."""
    if isinstance(value, GoldenScalar):
        return value
    return GoldenScalar(
        Fraction(float(value)).limit_denominator(max_denominator), 0
    )
