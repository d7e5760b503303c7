import pytest

from conetile.field import QF
from conetile.geometry import Ray


@pytest.fixture
def m1() -> Ray:
    return Ray(QF.of(-1, 2), QF.parse("3+2*sqrt(2)", 2))


@pytest.fixture
def m2() -> Ray:
    return Ray(QF.parse("3+2*sqrt(2)", 2), QF.of(-1, 2))
