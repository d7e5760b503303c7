import math
from dataclasses import dataclass
from fractions import Fraction
from typing import overload

from conetile.field import QF, FieldMismatchError, squarefree_decomposition
from conetile.geometry.cone import Cone2
from conetile.geometry.matrix import LatMat
from conetile.geometry.vectors import Ray, Vector, cross


@dataclass(frozen=True, slots=True)
class EigenData:
    eigenvalues: tuple[QF, QF]
    eigenrays: tuple[Ray, Ray]


@overload
def apply(matrix: LatMat, p: Ray) -> Ray: ...
@overload
def apply(matrix: LatMat, p: Vector) -> Vector: ...
def apply(matrix: LatMat, p: Ray | Vector) -> Ray | Vector:
    image = Vector(
        matrix.a11 * p.u + matrix.a12 * p.v,
        matrix.a21 * p.u + matrix.a22 * p.v,
    )
    return image.ray() if isinstance(p, Ray) else image


def apply_cone(matrix: LatMat, cone: Cone2) -> Cone2:
    return Cone2(apply(matrix, cone.r1), apply(matrix, cone.r2))


def ray_eigenvalue(matrix: LatMat, ray: Ray) -> QF | None:
    """The factor lambda with matrix * ray = lambda * ray, or None if the ray is not an eigenray."""
    image = apply(matrix, ray.vector())
    if cross(ray, image):
        return None
    return image.u / ray.u if ray.u else image.v / ray.v


def _eigenvector(matrix: LatMat, eigenvalue: QF) -> Vector:
    d = eigenvalue.d
    if matrix.a12 != 0:
        return Vector(QF.of(matrix.a12, d), eigenvalue - matrix.a11)
    if matrix.a21 != 0:
        return Vector(eigenvalue - matrix.a22, QF.of(matrix.a21, d))
    # diagonal, distinct entries
    return Vector.of(1, 0, d) if eigenvalue == matrix.a11 else Vector.of(0, 1, d)


def eigen_data(matrix: LatMat, d: int) -> EigenData | None:
    """
    Exact eigenvalues and eigenrays of the matrix inside Q(sqrt(d)).

    Eigenrays are determined up to sign; callers orient them against a cone.
    Returns None when the eigenvalues are not real (finite-order rotations).
    Raises FieldMismatchError when they are irrational outside Q(sqrt(d)).
    """
    trace, det = matrix.trace, matrix.det
    discriminant = trace * trace - 4 * det
    if discriminant < 0:
        return None

    root = math.isqrt(discriminant)
    if root * root == discriminant:
        larger = QF(Fraction(trace + root, 2), Fraction(0), d)
        smaller = QF(Fraction(trace - root, 2), Fraction(0), d)
    else:
        s, core = squarefree_decomposition(discriminant)
        if core != d:
            raise FieldMismatchError(
                f"Eigenvalues of {matrix} live in Q(sqrt({core})), not Q(sqrt({d}))"
            )
        larger = QF(Fraction(trace, 2), Fraction(s, 2), d)
        smaller = larger.conj()

    if larger == smaller and matrix.a12 == 0 and matrix.a21 == 0:
        rays = (Ray.of(1, 0, d), Ray.of(0, 1, d))
    else:
        rays = (_eigenvector(matrix, larger).ray(), _eigenvector(matrix, smaller).ray())
    return EigenData(eigenvalues=(larger, smaller), eigenrays=rays)
