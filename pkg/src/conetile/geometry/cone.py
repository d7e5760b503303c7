from dataclasses import dataclass

from conetile.geometry.vectors import Ray, Vector, cross


class DegenerateConeError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Cone2:
    """
    A salient two-dimensional closed cone R+r1 + R+r2.

    The boundary rays are re-ordered on construction so that cross(r1, r2) > 0:
    r1 is the clockwise boundary ray, r2 the counter-clockwise one.
    """

    r1: Ray
    r2: Ray

    def __post_init__(self) -> None:
        orientation = cross(self.r1, self.r2).sign()
        if orientation == 0:
            raise DegenerateConeError(
                f"Rays {self.r1} and {self.r2} are equal or opposite and span no salient cone"
            )
        if orientation < 0:
            r1, r2 = self.r2, self.r1
            object.__setattr__(self, "r1", r1)
            object.__setattr__(self, "r2", r2)

    @classmethod
    def spanning(cls, p: Ray | Vector, q: Ray | Vector) -> "Cone2":
        return cls(_as_ray(p), _as_ray(q))

    @property
    def d(self) -> int:
        return self.r1.d

    @property
    def rays(self) -> tuple[Ray, Ray]:
        return self.r1, self.r2

    def __str__(self) -> str:
        return f"cone({self.r1}, {self.r2})"

    def contains_cone(self, other: "Cone2") -> bool:
        return cone_contains(self, other.r1) and cone_contains(self, other.r2)

    def interiors_meet(self, other: "Cone2") -> bool:
        """True iff the open cones share a point (both cones lie in one half-plane)."""
        return cross(self.r1, other.r2).sign() > 0 and cross(other.r1, self.r2).sign() > 0

    def shared_rays(self, other: "Cone2") -> tuple[Ray, ...]:
        return tuple(ray for ray in self.rays if ray in other.rays)


def _as_ray(p: Ray | Vector) -> Ray:
    return p if isinstance(p, Ray) else p.ray()


def cone_contains(cone: Cone2, p: Ray | Vector, strict: bool = False) -> bool:
    """Membership by the two cross-product signs; strict tests the open cone."""
    left = cross(cone.r1, p).sign()
    right = cross(p, cone.r2).sign()
    if strict:
        return left > 0 and right > 0
    if isinstance(p, Vector) and p.is_zero():
        return True
    return left >= 0 and right >= 0
