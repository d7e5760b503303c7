"""
Scenario files: TOML documents describing the cones and generators of one
Picard-number-two action.

    name = "oguiso"
    d = 2
    n = 3

    [nef]
    rays = ["(1, 0)", "(0, 1)"]

    [mov]
    rays = ["(-1, 3+2*sqrt(2))", "(3+2*sqrt(2), -1)"]

    [[generators]]
    name = "tau1"
    action = "bir"
    matrix = [[-1, 0], [6, 1]]

    [intersection]
    basis = "integral"
    form = ["2", "6", "6", "2"]
    cn1 = ["0", "0"]
    c2_positive = false

Numbers use the canonical a+b*sqrt(d) encoding. Unknown keys are rejected.
"""

import logging
import tomllib
from importlib.resources import files
from pathlib import Path
from typing import Any

from conetile.chern import LinFunc, SymForm
from conetile.field import QF
from conetile.geometry import Cone2, LatMat, Ray
from conetile.groups import (
    Action,
    ActionScenario,
    FormBasis,
    Generator,
    IntersectionData,
    ScenarioError,
)

logger = logging.getLogger(__name__)

SUFFIX = ".scenario"

_TOP_KEYS = {"name", "d", "n", "nef", "mov", "generators", "intersection"}
_CONE_KEYS = {"rays"}
_GENERATOR_KEYS = {"name", "action", "matrix"}
_INTERSECTION_KEYS = {"basis", "form", "cn1", "c2_positive"}


def _check_keys(table: dict[str, Any], allowed: set[str], where: str) -> None:
    unknown = sorted(set(table) - allowed)
    if unknown:
        raise ScenarioError(f"Unknown keys in {where}: {', '.join(unknown)}")


def _require(table: dict[str, Any], key: str, where: str) -> Any:
    if key not in table:
        raise ScenarioError(f"Missing key {key!r} in {where}")
    return table[key]


def _parse_cone(table: Any, d: int, where: str) -> Cone2:
    if not isinstance(table, dict):
        raise ScenarioError(f"[{where}] must be a table")
    _check_keys(table, _CONE_KEYS, f"[{where}]")
    rays = _require(table, "rays", f"[{where}]")
    if not isinstance(rays, list) or len(rays) != 2:
        raise ScenarioError(f"[{where}] needs exactly two rays, got {rays!r}")
    return Cone2(Ray.parse(str(rays[0]), d), Ray.parse(str(rays[1]), d))


def _parse_generator(table: dict[str, Any]) -> Generator:
    _check_keys(table, _GENERATOR_KEYS, "[[generators]]")
    name = str(_require(table, "name", "[[generators]]"))
    action = _require(table, "action", f"generator {name}")
    try:
        role = Action(action)
    except ValueError as e:
        raise ScenarioError(f"Generator {name} has unknown action {action!r}") from e
    matrix = LatMat.from_rows(_require(table, "matrix", f"generator {name}"))
    return Generator(name=name, matrix=matrix, action=role)


def _parse_numbers(values: Any, d: int, where: str) -> list[QF]:
    if not isinstance(values, list):
        raise ScenarioError(f"{where} must be a list, got {values!r}")
    return [QF.parse(str(value), d) for value in values]


def _parse_intersection(table: Any, d: int, n: int | None) -> IntersectionData:
    if not isinstance(table, dict):
        raise ScenarioError("[intersection] must be a table")
    _check_keys(table, _INTERSECTION_KEYS, "[intersection]")
    basis = FormBasis(table.get("basis", FormBasis.INTEGRAL.value))

    form = None
    if "form" in table:
        coeffs = _parse_numbers(table["form"], d, "form")
        if n is not None and len(coeffs) != n + 1:
            raise ScenarioError(f"form needs n + 1 = {n + 1} coefficients, got {len(coeffs)}")
        form = SymForm(len(coeffs) - 1, tuple(coeffs))

    cn1 = None
    if "cn1" in table:
        values = _parse_numbers(table["cn1"], d, "cn1")
        if len(values) != 2:
            raise ScenarioError(f"cn1 needs two pairings, got {len(values)}")
        cn1 = LinFunc((values[0], values[1]))

    c2_positive = table.get("c2_positive")
    if c2_positive is not None and not isinstance(c2_positive, bool):
        raise ScenarioError(f"c2_positive must be a boolean, got {c2_positive!r}")
    return IntersectionData(basis=basis, form=form, cn1=cn1, c2_positive=c2_positive)


def parse_scenario(text: str, name: str = "scenario") -> ActionScenario:
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ScenarioError(f"Invalid scenario file: {e}") from e
    _check_keys(data, _TOP_KEYS, "scenario")

    try:
        d = _require(data, "d", "scenario")
        if not isinstance(d, int):
            raise ScenarioError(f"d must be an integer, got {d!r}")
        n = data.get("n")
        if n is not None and not isinstance(n, int):
            raise ScenarioError(f"n must be an integer, got {n!r}")
        generators = data.get("generators", [])
        if not isinstance(generators, list):
            raise ScenarioError("generators must be an array of tables")
        intersection = (
            _parse_intersection(data["intersection"], d, n) if "intersection" in data else None
        )
        return ActionScenario(
            d=d,
            nef=_parse_cone(_require(data, "nef", "scenario"), d, "nef"),
            mov=_parse_cone(_require(data, "mov", "scenario"), d, "mov"),
            generators=tuple(_parse_generator(g) for g in generators),
            n=n,
            name=str(data.get("name", name)),
            intersection=intersection,
        )
    except ScenarioError:
        raise
    except (ValueError, TypeError) as e:
        raise ScenarioError(f"Invalid scenario: {e}") from e


def _quote(value: object) -> str:
    return f'"{value}"'


def _quoted_list(values: list[object] | tuple[object, ...]) -> str:
    return "[" + ", ".join(_quote(v) for v in values) + "]"


def dump_scenario(scenario: ActionScenario) -> str:
    lines = [f"name = {_quote(scenario.name)}", f"d = {scenario.d}"]
    if scenario.n is not None:
        lines.append(f"n = {scenario.n}")

    for key, cone in (("nef", scenario.nef), ("mov", scenario.mov)):
        lines += ["", f"[{key}]", f"rays = {_quoted_list(cone.rays)}"]

    for g in scenario.generators:
        m = g.matrix
        lines += [
            "",
            "[[generators]]",
            f"name = {_quote(g.name)}",
            f"action = {_quote(g.action.value)}",
            f"matrix = [[{m.a11}, {m.a12}], [{m.a21}, {m.a22}]]",
        ]

    data = scenario.intersection
    if data is not None:
        lines += ["", "[intersection]", f"basis = {_quote(data.basis.value)}"]
        if data.form is not None:
            lines.append(f"form = {_quoted_list(data.form.coeffs)}")
        if data.cn1 is not None:
            lines.append(f"cn1 = {_quoted_list(data.cn1.c)}")
        if data.c2_positive is not None:
            lines.append(f"c2_positive = {str(data.c2_positive).lower()}")
    return "\n".join(lines) + "\n"


def bundled_names() -> list[str]:
    data = files("conetile") / "data"
    return sorted(
        entry.name.removesuffix(SUFFIX) for entry in data.iterdir() if entry.name.endswith(SUFFIX)
    )


def load_scenario(source: str) -> ActionScenario:
    """Loads a scenario from a file path, or by name from the bundled data."""
    path = Path(source)
    if path.is_file():
        logger.debug("Loading scenario from %s", path)
        return parse_scenario(path.read_text(encoding="utf-8"), name=path.stem)

    name = source.removesuffix(SUFFIX)
    bundled = files("conetile") / "data" / f"{name}{SUFFIX}"
    if not bundled.is_file():
        raise ScenarioError(
            f"No scenario file {source!r}; bundled scenarios: {', '.join(bundled_names())}"
        )
    logger.debug("Loading bundled scenario %s", name)
    return parse_scenario(bundled.read_text(encoding="utf-8"), name=name)
