import pytest

from conetile.chern import SymForm
from conetile.field import QF
from conetile.geometry import Cone2, LatMat
from conetile.groups import (
    Action,
    GroupKind,
    arithmetic_certificate,
    classify,
    product_family,
    validate_scenario,
)


def test_threefold_member_is_oguiso(
    nef_quadrant: Cone2, mov_oguiso: Cone2, tau1: LatMat, tau2: LatMat
) -> None:
    scenario = product_family(3)

    assert scenario.d == 2
    assert scenario.nef == nef_quadrant
    assert scenario.mov == mov_oguiso
    assert [g.matrix for g in scenario.generators] == [tau1, tau2]
    assert scenario.intersection is not None
    assert scenario.intersection.form == SymForm.of(3, [2, 6, 6, 2], 2)


def test_fourfold_member_lives_over_sqrt15() -> None:
    scenario = product_family(4)

    assert scenario.d == 15
    assert scenario.mov.r2.v == QF.parse("4+sqrt(15)", 15)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7], ids=str)
def test_family_action_is_infinite_dihedral(n: int) -> None:
    scenario = product_family(n)
    cone = scenario.cone(Action.BIR)

    profile = classify(scenario.action_generators(Action.BIR), cone)

    assert profile.kind is GroupKind.INFINITE_DIHEDRAL
    assert profile.generator.trace == 4 * n * n - 2
    assert arithmetic_certificate(profile, cone).passed
    assert not validate_scenario(scenario).has_errors


def test_family_starts_at_three() -> None:
    with pytest.raises(ValueError, match="n = 3"):
        product_family(2)
