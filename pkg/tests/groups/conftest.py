import pytest

from conetile.geometry import Cone2, LatMat
from conetile.groups import (
    ActionScenario,
    Finding,
    FindingsReport,
    Severity,
    make_scenario,
)


@pytest.fixture
def oguiso_scenario(
    nef_quadrant: Cone2, mov_oguiso: Cone2, tau1: LatMat, tau2: LatMat
) -> ActionScenario:
    return make_scenario(2, nef_quadrant, mov_oguiso, bir=[tau1, tau2], n=3, name="oguiso")


@pytest.fixture
def sample_findings() -> FindingsReport:
    return FindingsReport(
        findings=[
            Finding("a", Severity.INFO, "both mov boundary rays are irrational"),
            Finding("b", Severity.ERROR, "nef boundary ray (1, 0) is rational"),
            Finding("b", Severity.ERROR, "dimension n = 3 is odd"),
            Finding("c", Severity.INFO, "Nef lies inside the interior of Mov"),
        ]
    )
