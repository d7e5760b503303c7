import pytest

from conetile.field import QF
from conetile.geometry import Cone2, LatMat, Ray

SQRT2_UNIT = "3+2*sqrt(2)"


@pytest.fixture
def tau1() -> LatMat:
    return LatMat(-1, 0, 6, 1)


@pytest.fixture
def tau2() -> LatMat:
    return LatMat(1, 6, 0, -1)


@pytest.fixture
def f_oguiso(tau1: LatMat, tau2: LatMat) -> LatMat:
    return tau1 @ tau2


@pytest.fixture
def alpha_oguiso() -> QF:
    return QF.parse("17+12*sqrt(2)", 2)


@pytest.fixture
def nef_quadrant() -> Cone2:
    return Cone2(Ray.of(1, 0, 2), Ray.of(0, 1, 2))


@pytest.fixture
def mov_oguiso() -> Cone2:
    unit = QF.parse(SQRT2_UNIT, 2)
    return Cone2(Ray(QF.of(-1, 2), unit), Ray(unit, QF.of(-1, 2)))
