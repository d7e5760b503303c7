from dataclasses import dataclass
from enum import Enum

from conetile.geometry import Cone2, Vector


class DomainError(ValueError):
    pass


class PointOnBoundaryError(DomainError):
    pass


class DomainCase(Enum):
    FINITE_TRIVIAL = "finite_trivial"
    FINITE_INVOLUTION = "finite_involution"
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"


@dataclass(frozen=True, slots=True, order=True)
class Word:
    """The group element f^k * tau^flip."""

    k: int
    flip: bool = False

    def __str__(self) -> str:
        return f"(k={self.k}, flip)" if self.flip else f"(k={self.k})"


@dataclass(frozen=True, slots=True)
class DomainResult:
    pi: Cone2
    case: DomainCase
    seed: Vector
    cone: Cone2
    z1: Vector | None = None
    z2: Vector | None = None
    y: Vector | None = None

    def witnesses(self) -> dict[str, Vector]:
        named = {"z1": self.z1, "z2": self.z2, "y": self.y}
        return {name: vector for name, vector in named.items() if vector is not None}

    def is_integral(self) -> bool:
        return all(vector.is_integral() for vector in self.witnesses().values())
