from math import comb

from conetile.chern import SymForm
from conetile.field import QF, squarefree_decomposition
from conetile.geometry import Cone2, LatMat, Ray
from conetile.groups.scenario import (
    Action,
    ActionScenario,
    FormBasis,
    Generator,
    IntersectionData,
)


def product_family(n: int) -> ActionScenario:
    """
    The n-fold complete intersection in P^n x P^n cut out by n - 1 forms of
    bidegree (1, 1) and one of bidegree (2, 2).

    The two projections give birational involutions acting on the hyperplane
    pullbacks as [[-1, 0], [2n, 1]] and [[1, 2n], [0, -1]]; their product has
    trace 4n^2 - 2 and the movable cone is spanned by its eigenrays
    (-1, n + sqrt(n^2 - 1)) and (n + sqrt(n^2 - 1), -1). The intersection
    numbers are L1^m . L2^(n-m) = 2 C(n, m). n = 3 is the Oguiso threefold.
    """
    if n < 3:
        raise ValueError(f"The family starts at n = 3, got {n}")
    s, d = squarefree_decomposition(n * n - 1)
    mu = QF(n, s, d)
    nef = Cone2(Ray.of(1, 0, d), Ray.of(0, 1, d))
    mov = Cone2(Ray(QF.of(-1, d), mu), Ray(mu, QF.of(-1, d)))
    generators = (
        Generator("tau1", LatMat(-1, 0, 2 * n, 1), Action.BIR),
        Generator("tau2", LatMat(1, 2 * n, 0, -1), Action.BIR),
    )
    form = SymForm.of(n, [2 * comb(n, m) for m in range(n + 1)], d)
    return ActionScenario(
        d=d,
        nef=nef,
        mov=mov,
        generators=generators,
        n=n,
        name=f"product-family-{n}",
        intersection=IntersectionData(basis=FormBasis.INTEGRAL, form=form),
    )
