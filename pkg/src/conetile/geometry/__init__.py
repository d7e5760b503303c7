from conetile.geometry.action import EigenData, apply, apply_cone, eigen_data, ray_eigenvalue
from conetile.geometry.cone import Cone2, DegenerateConeError, cone_contains
from conetile.geometry.matrix import LatMat
from conetile.geometry.vectors import Ray, Vector, cross, is_rational_ray

__all__ = [
    "Cone2",
    "DegenerateConeError",
    "EigenData",
    "LatMat",
    "Ray",
    "Vector",
    "apply",
    "apply_cone",
    "cone_contains",
    "cross",
    "eigen_data",
    "is_rational_ray",
    "ray_eigenvalue",
]
