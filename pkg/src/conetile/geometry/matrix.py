from collections.abc import Sequence
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class LatMat:
    """An element of GL(2, Z) acting on column vectors in the integral basis."""

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError(f"Matrix {self} has determinant {self.det}, expected +1 or -1")

    @classmethod
    def identity(cls) -> "LatMat":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LatMat":
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise ValueError(f"Expected a 2x2 matrix, got {rows!r}")
        entries = [entry for row in rows for entry in row]
        if not all(isinstance(entry, int) and not isinstance(entry, bool) for entry in entries):
            raise ValueError(f"Matrix entries must be integers, got {rows!r}")
        return cls(*entries)

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def trace(self) -> int:
        return self.a11 + self.a22

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a11, self.a12), (self.a21, self.a22)

    def __matmul__(self, other: "LatMat") -> "LatMat":
        return LatMat(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __pow__(self, exponent: int) -> "LatMat":
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = LatMat.identity()
        while n > 0:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __str__(self) -> str:
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"

    def inverse(self) -> "LatMat":
        det = self.det
        return LatMat(self.a22 * det, -self.a12 * det, -self.a21 * det, self.a11 * det)

    def is_identity(self) -> bool:
        return self == LatMat.identity()

    def is_hyperbolic(self) -> bool:
        return self.det == 1 and abs(self.trace) > 2

    def order(self) -> int | None:
        """Finite order of the matrix, or None when it has infinite order."""
        if self.is_identity():
            return 1
        if self.det == -1:
            return 2 if self.trace == 0 else None
        return {-2: 2 if self == LatMat(-1, 0, 0, -1) else None, -1: 3, 0: 4, 1: 6}.get(self.trace)
