from dataclasses import dataclass
from enum import Enum

from conetile.field import QF
from conetile.geometry import LatMat


class GroupKind(Enum):
    TRIVIAL = "trivial"
    ORDER_TWO = "order_two"
    INFINITE_CYCLIC = "infinite_cyclic"
    INFINITE_DIHEDRAL = "infinite_dihedral"


@dataclass(frozen=True, slots=True)
class GroupProfile:
    kind: GroupKind
    plus_generator: LatMat | None = None
    minus_rep: LatMat | None = None
    alpha: QF | None = None

    def __post_init__(self) -> None:
        infinite = self.kind in (GroupKind.INFINITE_CYCLIC, GroupKind.INFINITE_DIHEDRAL)
        if infinite != (self.plus_generator is not None and self.alpha is not None):
            raise ValueError(f"{self.kind.name} profile needs a generator and alpha iff infinite")
        if infinite and self.alpha is not None and self.alpha <= 1:
            raise ValueError(f"alpha = {self.alpha} must exceed 1")
        reflective = self.kind in (GroupKind.ORDER_TWO, GroupKind.INFINITE_DIHEDRAL)
        if reflective != (self.minus_rep is not None):
            raise ValueError(
                f"{self.kind.name} profile needs a minus representative iff reflective"
            )
        if self.minus_rep is not None and not (self.minus_rep @ self.minus_rep).is_identity():
            raise ValueError(f"Minus representative {self.minus_rep} is not an involution")

    @property
    def is_infinite(self) -> bool:
        return self.plus_generator is not None

    @property
    def generator(self) -> LatMat:
        return self.plus_generator or LatMat.identity()

    @property
    def involution(self) -> LatMat:
        return self.minus_rep or LatMat.identity()

    @property
    def theta(self) -> LatMat:
        """The second involution f * tau of a dihedral profile."""
        return self.generator @ self.involution

    def element(self, k: int, flip: bool) -> LatMat:
        """The group element f^k * tau^flip."""
        element = self.generator**k
        return element @ self.involution if flip else element
