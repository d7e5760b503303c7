import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from sympy import factorint

Rational = int | Fraction

_TERM = re.compile(
    r"""\s*
    (?P<sign>[+-])?\s*
    (?:(?P<number>\d+(?:/\d+)?)\s*(?P<times>\*)?\s*)?
    (?P<root>sqrt\(\s*(?P<radicand>\d+)\s*\))?
    \s*""",
    re.VERBOSE,
)


class FieldMismatchError(ValueError):
    pass


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Splits a positive integer as n = s**2 * core with core square-free."""
    if n <= 0:
        raise ValueError(f"Square-free decomposition needs a positive integer, got {n}")
    s, core = 1, 1
    for prime, exponent in factorint(n).items():
        s *= prime ** (exponent // 2)
        if exponent % 2:
            core *= prime
    return s, core


@cache
def _check_radicand(d: int) -> None:
    if d < 2 or squarefree_decomposition(d)[1] != d:
        raise ValueError(f"Radicand must be a square-free integer >= 2, got {d}")


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True)
class QF:
    """An exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d))."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        _check_radicand(self.d)

    @classmethod
    def of(cls, value: "Rational | QF", d: int) -> "QF":
        if isinstance(value, QF):
            if value.d != d:
                raise FieldMismatchError(
                    f"Value {value} lives in Q(sqrt({value.d})), not Q(sqrt({d}))"
                )
            return value
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def parse(cls, text: str, d: int) -> "QF":
        """
        Parses the canonical text form ``p/q+r/s*sqrt(d)``.

        Bare rationals, ``sqrt(d)``, ``-sqrt(d)`` and ``k*sqrt(d)`` are accepted too.
        """
        rational: Fraction | None = None
        irrational: Fraction | None = None
        position = 0
        stripped = text.strip()
        if not stripped:
            raise ValueError("Empty quadratic field literal")

        while position < len(stripped):
            match = _TERM.match(stripped, position)
            if match is None or match.end() == position:
                raise ValueError(f"Malformed quadratic field literal: {text!r}")
            sign, number, root = match.group("sign"), match.group("number"), match.group("root")
            if number is None and root is None:
                raise ValueError(f"Malformed quadratic field literal: {text!r}")
            if position > 0 and sign is None:
                raise ValueError(f"Missing sign between terms in {text!r}")
            if match.group("times") and root is None:
                raise ValueError(f"Dangling '*' in {text!r}")

            try:
                value = Fraction(number) if number is not None else Fraction(1)
            except ZeroDivisionError as e:
                raise ValueError(f"Zero denominator in {text!r}") from e
            if sign == "-":
                value = -value

            if root is None:
                if rational is not None:
                    raise ValueError(f"Repeated rational term in {text!r}")
                rational = value
            else:
                radicand = int(match.group("radicand"))
                if radicand != d:
                    raise FieldMismatchError(
                        f"Literal {text!r} uses sqrt({radicand}), expected sqrt({d})"
                    )
                if irrational is not None:
                    raise ValueError(f"Repeated sqrt term in {text!r}")
                irrational = value
            position = match.end()

        return cls(rational or Fraction(0), irrational or Fraction(0), d)

    def _coerce(self, other: object) -> "QF | None":
        if isinstance(other, QF):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"Cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))"
                )
            return other
        if isinstance(other, int | Fraction):
            return QF(Fraction(other), Fraction(0), self.d)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QF):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, int | Fraction):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __add__(self, other: "QF | Rational") -> "QF":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QF(self.a + rhs.a, self.b + rhs.b, self.d)

    def __radd__(self, other: Rational) -> "QF":
        return self + other

    def __neg__(self) -> "QF":
        return QF(-self.a, -self.b, self.d)

    def __sub__(self, other: "QF | Rational") -> "QF":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QF(self.a - rhs.a, self.b - rhs.b, self.d)

    def __rsub__(self, other: Rational) -> "QF":
        return (-self) + other

    def __mul__(self, other: "QF | Rational") -> "QF":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QF(
            self.a * rhs.a + self.b * rhs.b * self.d,
            self.a * rhs.b + self.b * rhs.a,
            self.d,
        )

    def __rmul__(self, other: Rational) -> "QF":
        return self * other

    def __truediv__(self, other: "QF | Rational") -> "QF":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: Rational) -> "QF":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "QF":
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = QF(Fraction(1), Fraction(0), self.d)
        while n > 0:
            if n & 1:
                result *= base
            base *= base
            n >>= 1
        return result

    def __abs__(self) -> "QF":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __lt__(self, other: "QF | Rational") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "QF | Rational") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "QF | Rational") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "QF | Rational") -> bool:
        return (self - other).sign() >= 0

    def __str__(self) -> str:
        if self.b == 0:
            return _format_rational(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{_format_rational(self.a)}{sign}{_format_rational(abs(self.b))}*sqrt({self.d})"

    def conj(self) -> "QF":
        return QF(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QF":
        if not self:
            raise ZeroDivisionError(f"{self} has no inverse")
        n = self.norm()
        conj = self.conj()
        return QF(conj.a / n, conj.b / n, self.d)

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(d), decided without floating point."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # a and b have opposite signs: the larger square wins.
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def degree(self) -> int:
        return 1 if self.b == 0 else 2

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1


def qf_sign(x: QF) -> int:
    return x.sign()


def qf_trace(x: QF) -> Fraction:
    return x.trace()


def qf_norm(x: QF) -> Fraction:
    return x.norm()


def minimal_poly_degree(x: QF) -> int:
    return x.degree()
