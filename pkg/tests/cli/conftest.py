from pathlib import Path

import pytest

from conetile.cli import load_scenario, parse_scenario
from conetile.groups import ActionScenario

ODD_HYPERBOLIC = """\
name = "odd-hyperbolic"
d = 5
n = 3

[nef]
rays = ["(1, -1/2-1/2*sqrt(5))", "(1, -1/2+1/2*sqrt(5))"]

[mov]
rays = ["(1, -1/2-1/2*sqrt(5))", "(1, -1/2+1/2*sqrt(5))"]

[[generators]]
name = "f"
action = "aut"
matrix = [[2, 1], [1, 1]]

[intersection]
basis = "eigen"
form = ["0", "1", "1", "0"]
cn1 = ["1", "0"]
"""

INTEGRAL_CN1 = """\
name = "integral-cn1"
d = 5
n = 4

[nef]
rays = ["(1, -1/2-1/2*sqrt(5))", "(1, -1/2+1/2*sqrt(5))"]

[mov]
rays = ["(1, -1/2-1/2*sqrt(5))", "(1, -1/2+1/2*sqrt(5))"]

[[generators]]
name = "f"
action = "aut"
matrix = [[2, 1], [1, 1]]

[intersection]
basis = "integral"
cn1 = ["1", "0"]
"""


@pytest.fixture
def oguiso() -> ActionScenario:
    return load_scenario("oguiso")


@pytest.fixture
def hyperbolic() -> ActionScenario:
    return load_scenario("hyperbolic-aut")


@pytest.fixture
def odd_hyperbolic_file(tmp_path: Path) -> Path:
    path = tmp_path / "odd-hyperbolic.scenario"
    path.write_text(ODD_HYPERBOLIC, encoding="utf-8")
    return path


@pytest.fixture
def integral_cn1() -> ActionScenario:
    return parse_scenario(INTEGRAL_CN1)
