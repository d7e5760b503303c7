import pytest

from conetile.domains import DomainResult, build_domain
from conetile.geometry import Cone2, LatMat
from conetile.groups import GroupProfile, classify


@pytest.fixture
def dihedral_profile(mov_oguiso: Cone2, tau1: LatMat, tau2: LatMat) -> GroupProfile:
    return classify([tau1, tau2], mov_oguiso)


@pytest.fixture
def cyclic_profile(mov_oguiso: Cone2, f_oguiso: LatMat) -> GroupProfile:
    return classify([f_oguiso], mov_oguiso)


@pytest.fixture
def dihedral_domain(dihedral_profile: GroupProfile, mov_oguiso: Cone2) -> DomainResult:
    return build_domain(dihedral_profile, mov_oguiso)


@pytest.fixture
def cyclic_domain(cyclic_profile: GroupProfile, mov_oguiso: Cone2) -> DomainResult:
    return build_domain(cyclic_profile, mov_oguiso)
