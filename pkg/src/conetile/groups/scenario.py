from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from conetile.chern import Basis, LinFunc, SymForm, integral_basis
from conetile.geometry import Cone2, LatMat, cone_contains
from conetile.groups.classify import is_cone_automorphism


class ScenarioError(ValueError):
    pass


class Action(Enum):
    AUT = "aut"
    BIR = "bir"


class FormBasis(Enum):
    INTEGRAL = "integral"
    EIGEN = "eigen"


@dataclass(frozen=True, slots=True)
class Generator:
    name: str
    matrix: LatMat
    action: Action


@dataclass(frozen=True, slots=True)
class IntersectionData:
    """
    Optional intersection-theoretic input.

    In the eigen basis x1 spans the boundary ray r2 of the nef cone that an
    infinite-order automorphism expands, and x2 spans r1.
    """

    basis: FormBasis = FormBasis.INTEGRAL
    form: SymForm | None = None
    cn1: LinFunc | None = None
    c2_positive: bool | None = None


@dataclass(frozen=True, slots=True)
class ActionScenario:
    d: int
    nef: Cone2
    mov: Cone2
    generators: tuple[Generator, ...] = ()
    n: int | None = None
    name: str = "scenario"
    intersection: IntersectionData | None = None

    def __post_init__(self) -> None:
        if self.nef.d != self.d or self.mov.d != self.d:
            raise ScenarioError(f"Cones must live in Q(sqrt({self.d}))")
        if not self.mov.contains_cone(self.nef):
            raise ScenarioError(f"Nef cone {self.nef} is not contained in {self.mov}")
        if self.n is not None and self.n < 2:
            raise ScenarioError(f"Dimension must be at least 2, got {self.n}")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ScenarioError(f"Generator names must be unique, got {names}")

    def preservation_failures(self) -> list[str]:
        """Automorphisms must preserve Nef and Mov, birational generators Mov."""
        failures = []
        for g in self.generators:
            if g.action is Action.AUT and not is_cone_automorphism(g.matrix, self.nef):
                failures.append(f"automorphism {g.name} = {g.matrix} does not preserve {self.nef}")
            if not is_cone_automorphism(g.matrix, self.mov):
                failures.append(f"generator {g.name} = {g.matrix} does not preserve {self.mov}")
        return failures

    @property
    def aut_gens(self) -> list[LatMat]:
        return [g.matrix for g in self.generators if g.action is Action.AUT]

    @property
    def bir_gens(self) -> list[LatMat]:
        return [g.matrix for g in self.generators if g.action is Action.BIR]

    def cone(self, action: Action) -> Cone2:
        return self.nef if action is Action.AUT else self.mov

    def action_generators(self, action: Action) -> list[LatMat]:
        """Aut(X) acts through its own generators; Bir(X) is generated by Aut(X) and the rest."""
        return self.aut_gens if action is Action.AUT else self.aut_gens + self.bir_gens

    def nef_inside_mov_interior(self) -> bool:
        return all(cone_contains(self.mov, ray, strict=True) for ray in self.nef.rays)

    def eigen_basis(self) -> Basis:
        """Nef boundary rays, counter-clockwise first: the eigenrays of an infinite Aut action."""
        return self.nef.r2.vector(), self.nef.r1.vector()

    def form_basis(self) -> Basis:
        if self.intersection is None or self.intersection.basis is FormBasis.INTEGRAL:
            return integral_basis(self.d)
        return self.eigen_basis()


def make_scenario(
    d: int,
    nef: Cone2,
    mov: Cone2,
    aut: Sequence[LatMat] = (),
    bir: Sequence[LatMat] = (),
    n: int | None = None,
    name: str = "scenario",
    intersection: IntersectionData | None = None,
) -> ActionScenario:
    generators = tuple(
        [Generator(f"a{i + 1}", m, Action.AUT) for i, m in enumerate(aut)]
        + [Generator(f"b{i + 1}", m, Action.BIR) for i, m in enumerate(bir)]
    )
    return ActionScenario(
        d=d, nef=nef, mov=mov, generators=generators, n=n, name=name, intersection=intersection
    )
