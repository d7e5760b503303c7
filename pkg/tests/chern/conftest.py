import pytest

from conetile.chern import Basis
from conetile.field import QF
from conetile.geometry import LatMat, Vector


@pytest.fixture
def golden() -> LatMat:
    return LatMat(2, 1, 1, 1)


@pytest.fixture
def golden_alpha() -> QF:
    return QF.parse("3/2+1/2*sqrt(5)", 5)


@pytest.fixture
def golden_eigenbasis() -> Basis:
    """x1 on the expanded eigenray, x2 on the contracted one."""
    return (
        Vector(QF.of(1, 5), QF.parse("-1/2+1/2*sqrt(5)", 5)),
        Vector(QF.of(1, 5), QF.parse("-1/2-1/2*sqrt(5)", 5)),
    )
