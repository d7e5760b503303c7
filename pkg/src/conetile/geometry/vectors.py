import math
from dataclasses import dataclass
from fractions import Fraction

from conetile.field import QF, FieldMismatchError, Rational


def _split_pair(text: str) -> tuple[str, str]:
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ValueError(f"Expected a pair '(u, v)', got {text!r}")
    parts = stripped[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"Expected exactly two coordinates in {text!r}")
    return parts[0], parts[1]


def _check_same_field(u: QF, v: QF) -> None:
    if u.d != v.d:
        raise FieldMismatchError(f"Coordinates {u} and {v} live in different fields")


@dataclass(frozen=True, slots=True)
class Vector:
    """A class in the rank-2 plane with exact coordinates in the integral basis."""

    u: QF
    v: QF

    def __post_init__(self) -> None:
        _check_same_field(self.u, self.v)

    @classmethod
    def of(cls, u: "Rational | QF", v: "Rational | QF", d: int) -> "Vector":
        return cls(QF.of(u, d), QF.of(v, d))

    @classmethod
    def parse(cls, text: str, d: int) -> "Vector":
        u, v = _split_pair(text)
        return cls(QF.parse(u, d), QF.parse(v, d))

    @property
    def d(self) -> int:
        return self.u.d

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(self.u - other.u, self.v - other.v)

    def __neg__(self) -> "Vector":
        return Vector(-self.u, -self.v)

    def __mul__(self, scalar: "QF | Rational") -> "Vector":
        return Vector(self.u * scalar, self.v * scalar)

    def __rmul__(self, scalar: "QF | Rational") -> "Vector":
        return self * scalar

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"

    def is_zero(self) -> bool:
        return not self.u and not self.v

    def is_integral(self) -> bool:
        return self.u.is_integer() and self.v.is_integer()

    def ray(self) -> "Ray":
        return Ray(self.u, self.v)


@dataclass(frozen=True, slots=True)
class Ray:
    """
    A ray R+(u, v), stored in canonical scale.

    The first nonzero coordinate is divided by its absolute value, so two rays
    are equal exactly when their canonical coordinates match.
    """

    u: QF
    v: QF

    def __post_init__(self) -> None:
        _check_same_field(self.u, self.v)
        pivot = self.u if self.u else self.v
        if not pivot:
            raise ValueError("A ray needs a nonzero direction")
        scale = abs(pivot)
        object.__setattr__(self, "u", self.u / scale)
        object.__setattr__(self, "v", self.v / scale)

    @classmethod
    def of(cls, u: "Rational | QF", v: "Rational | QF", d: int) -> "Ray":
        return cls(QF.of(u, d), QF.of(v, d))

    @classmethod
    def parse(cls, text: str, d: int) -> "Ray":
        return Vector.parse(text, d).ray()

    @property
    def d(self) -> int:
        return self.u.d

    def __neg__(self) -> "Ray":
        return Ray(-self.u, -self.v)

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"

    def vector(self) -> Vector:
        return Vector(self.u, self.v)

    def is_rational(self) -> bool:
        return self.u.is_rational() and self.v.is_rational()

    def primitive(self) -> Vector:
        """The primitive integral vector on a rational ray."""
        if not self.is_rational():
            raise ValueError(f"Ray {self} is irrational and has no integral point")
        u, v = self.u.a, self.v.a
        scale = math.lcm(u.denominator, v.denominator)
        iu, iv = int(u * scale), int(v * scale)
        g = math.gcd(iu, iv)
        return Vector.of(Fraction(iu, g), Fraction(iv, g), self.d)


def cross(p: Ray | Vector, q: Ray | Vector) -> QF:
    return p.u * q.v - p.v * q.u


def is_rational_ray(p: Ray) -> bool:
    return p.is_rational()
