from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from conetile.field import QF, FieldMismatchError, Rational
from conetile.geometry import LatMat, Vector, apply, cross

Basis = tuple[Vector, Vector]


class ChernPreconditionError(ValueError):
    pass


def integral_basis(d: int) -> Basis:
    return Vector.of(1, 0, d), Vector.of(0, 1, d)


@dataclass(frozen=True, slots=True)
class SymForm:
    """
    A symmetric n-linear form on the plane, stored by its values on basis monomials.

    coeffs[m] is the intersection number x1^m . x2^(n-m).
    """

    n: int
    coeffs: tuple[QF, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"Form degree must be at least 2, got {self.n}")
        if len(self.coeffs) != self.n + 1:
            raise ValueError(
                f"A degree-{self.n} form needs {self.n + 1} coefficients, got {len(self.coeffs)}"
            )
        if len({c.d for c in self.coeffs}) > 1:
            raise FieldMismatchError("Form coefficients live in different fields")

    @classmethod
    def of(cls, n: int, values: Sequence["Rational | QF"], d: int) -> "SymForm":
        return cls(n, tuple(QF.of(value, d) for value in values))

    @property
    def d(self) -> int:
        return self.coeffs[0].d

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True, slots=True)
class LinFunc:
    """Pairings (x1 . c, x2 . c) of a degree n-1 class c against the basis."""

    c: tuple[QF, QF]

    @classmethod
    def of(cls, first: "Rational | QF", second: "Rational | QF", d: int) -> "LinFunc":
        return cls((QF.of(first, d), QF.of(second, d)))

    def is_zero(self) -> bool:
        return not any(self.c)

    def at(self, vector: Vector) -> QF:
        """The pairing with a class written in the same basis as the functional."""
        return vector.u * self.c[0] + vector.v * self.c[1]


@dataclass(frozen=True, slots=True)
class ChernProduct:
    """A product c_{i1}...c_{ir} of Chern classes of total degree n-1, with its pairings."""

    indices: tuple[int, ...]
    pairing: LinFunc

    @property
    def degree(self) -> int:
        return sum(self.indices)

    def check_degree(self, n: int) -> None:
        if self.degree != n - 1:
            raise ChernPreconditionError(
                f"Chern product {self.indices} has degree {self.degree}, expected {n - 1}"
            )


def matrix_in_basis(matrix: LatMat, basis: Basis) -> tuple[tuple[QF, QF], tuple[QF, QF]]:
    """Coordinates of the matrix in the given basis; column j is the image of basis[j]."""
    b1, b2 = basis
    det = cross(b1, b2)
    if not det:
        raise ValueError(f"Basis vectors {b1} and {b2} are linearly dependent")
    columns = []
    for b in basis:
        image = apply(matrix, b)
        columns.append((cross(image, b2) / det, cross(b1, image) / det))
    (p11, p21), (p12, p22) = columns
    return (p11, p12), (p21, p22)


def functional_in_basis(phi: LinFunc, basis: Basis) -> LinFunc:
    return LinFunc((phi.at(basis[0]), phi.at(basis[1])))


def pullback(form: SymForm, matrix: LatMat, basis: Basis | None = None) -> SymForm:
    """The form F o M, expanded multinomially over the rank-2 basis."""
    n = form.n
    zero = QF.of(0, form.d)
    (p11, p12), (p21, p22) = matrix_in_basis(matrix, basis or integral_basis(form.d))
    pulled = []
    for m in range(n + 1):
        total = zero
        for i in range(m + 1):
            first = comb(m, i) * p11**i * p21 ** (m - i)
            for j in range(n - m + 1):
                second = comb(n - m, j) * p12**j * p22 ** (n - m - j)
                total += first * second * form.coeffs[i + j]
        pulled.append(total)
    return SymForm(n, tuple(pulled))


def middle_positivity(form: SymForm) -> bool:
    """
    Positivity of the middle intersection number for a form of even degree n = 2m.

    With every off-middle coefficient zero, (x1 + x2)^n = C(n, m) x1^m . x2^m,
    so an ample class forces the middle coefficient to be positive.
    """
    if form.n % 2:
        raise ChernPreconditionError(f"Middle positivity needs even degree, got n = {form.n}")
    middle = form.n // 2
    stray = [m for m, c in enumerate(form.coeffs) if m != middle and c]
    if stray:
        raise ChernPreconditionError(f"Off-middle coefficients are nonzero at m = {stray}")
    return form.coeffs[middle].sign() > 0
