import logging
from collections.abc import Callable
from dataclasses import dataclass

from conetile.chern import (
    ChernPreconditionError,
    Verdict,
    c2_obstruction,
    check_form_invariance,
    cn1_must_vanish,
    forced_vanishing,
    functional_in_basis,
    middle_positivity,
)
from conetile.cli.render import RenderConfig, render_tiling
from conetile.cli.reports import format_domain, format_findings, format_profile, format_tiling
from conetile.cli.scenario_file import dump_scenario
from conetile.domains import (
    DomainResult,
    TilingConfig,
    Violation,
    build_domain,
    enumerate_tiles,
    locate,
    verify_tiling,
)
from conetile.geometry import Cone2, Vector
from conetile.groups import (
    Action,
    ActionScenario,
    FormBasis,
    GroupProfile,
    arithmetic_certificate,
    classify,
    product_family,
    validate_scenario,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CommandResult:
    output: str
    exit_code: int = 0


def _profile(scenario: ActionScenario, action: Action) -> tuple[GroupProfile, Cone2]:
    cone = scenario.cone(action)
    return classify(scenario.action_generators(action), cone), cone


def _domain(
    scenario: ActionScenario, action: Action, seed: Vector | None
) -> tuple[GroupProfile, DomainResult]:
    profile, cone = _profile(scenario, action)
    return profile, build_domain(profile, cone, seed)


def cmd_validate(scenario: ActionScenario) -> CommandResult:
    report = validate_scenario(scenario)
    return CommandResult(format_findings(report), 1 if report.has_errors else 0)


def cmd_classify(scenario: ActionScenario, action: Action = Action.BIR) -> CommandResult:
    profile, cone = _profile(scenario, action)
    certificate = arithmetic_certificate(profile, cone) if profile.is_infinite else None
    failed = certificate is not None and not certificate.passed
    return CommandResult(format_profile(profile, action.value, certificate), 1 if failed else 0)


def cmd_domain(
    scenario: ActionScenario, action: Action = Action.BIR, seed: Vector | None = None
) -> CommandResult:
    profile, dr = _domain(scenario, action, seed)
    notes: list[str] = []
    if action is Action.BIR and profile.is_infinite:
        notes.append("the Nef-cone construction is applied to Mov unchanged")
    return CommandResult(format_domain(dr, notes))


def cmd_tile(
    scenario: ActionScenario,
    action: Action = Action.BIR,
    seed: Vector | None = None,
    config: TilingConfig | None = None,
    progress_callback: Callable[[int, int, list[Violation]], None] | None = None,
) -> CommandResult:
    config = config or TilingConfig()
    profile, dr = _domain(scenario, action, seed)
    report = verify_tiling(dr, profile, dr.cone, config=config, progress_callback=progress_callback)
    return CommandResult(format_tiling(report), 0 if report.passed else 1)


def cmd_locate(
    scenario: ActionScenario,
    point: Vector,
    action: Action = Action.BIR,
    seed: Vector | None = None,
) -> CommandResult:
    profile, dr = _domain(scenario, action, seed)
    return CommandResult(str(locate(dr, profile, point)))


def cmd_render(
    scenario: ActionScenario,
    action: Action = Action.BIR,
    depth: int = 8,
    seed: Vector | None = None,
    config: RenderConfig | None = None,
) -> CommandResult:
    profile, dr = _domain(scenario, action, seed)
    tiles = enumerate_tiles(dr, profile, depth)
    return CommandResult(render_tiling(dr, tiles, config))


def cmd_family(n: int) -> CommandResult:
    return CommandResult(dump_scenario(product_family(n)).rstrip("\n"))


def cmd_constraints(scenario: ActionScenario) -> CommandResult:
    """
    Intersection-theoretic checks against the automorphism action.

    Birational maps need not preserve intersection numbers, so only Aut(X)
    is consulted. The exit code is 1 when the data contradicts the action.
    """
    n = scenario.n
    if n is None:
        raise ChernPreconditionError(f"Scenario {scenario.name} does not declare n")
    profile, _ = _profile(scenario, Action.AUT)
    data = scenario.intersection
    lines = [f"n: {n}", f"aut kind: {profile.kind.name}"]

    if profile.plus_generator is None or profile.alpha is None:
        lines.append("automorphism action is finite: no obstruction applies")
        return CommandResult("\n".join(lines))

    f, alpha = profile.plus_generator, profile.alpha
    contradictions = 0
    lines.append(f"alpha: {alpha}")
    killed = ", ".join(str(m) for m in sorted(forced_vanishing(n, alpha)))
    lines.append(f"forced vanishing: x1^m.x2^(n-m) = 0 for m in {{{killed}}}")

    if n % 2:
        lines.append(f"parity: n = {n} is odd, so an infinite automorphism action is impossible")
        contradictions += 1

    basis = scenario.form_basis()
    if data is not None and data.form is not None:
        invariance = check_form_invariance(data.form, f, basis)
        lines.append(f"form invariant: {'yes' if invariance.invariant else 'no'}")
        if not invariance.invariant:
            contradictions += 1
        for m in invariance.violations:
            lines.append(f"form violation: x1^{m}.x2^{n - m} = {data.form.coeffs[m]}, must be 0")
        if n % 2 == 0 and data.basis is FormBasis.EIGEN:
            try:
                positive = middle_positivity(data.form)
            except ChernPreconditionError as e:
                lines.append(f"middle positivity: skipped ({e})")
            else:
                lines.append(f"middle positivity: {'yes' if positive else 'no'}")
                if not positive:
                    contradictions += 1

    if data is not None and data.cn1 is not None:
        phi = data.cn1
        if data.basis is FormBasis.INTEGRAL:
            phi = functional_in_basis(data.cn1, scenario.eigen_basis())
            lines.append(f"c_(n-1) on eigenrays: ({phi.c[0]}, {phi.c[1]})")
        certificate = cn1_must_vanish(phi, alpha)
        lines.append(f"c_(n-1) vanishes: {'yes' if certificate.consistent else 'no'}")
        lines += [f"c_(n-1) witness: {witness}" for witness in certificate.witnesses]
        if not certificate.consistent:
            contradictions += 1

    if n % 2 == 0 and data is not None and data.c2_positive is not None:
        verdict = c2_obstruction(n, data.c2_positive, alpha)
        lines.append(f"c2: {verdict.verdict.name} ({verdict.reason})")
        if verdict.verdict is Verdict.CONTRADICTION:
            contradictions += 1

    logger.info("Constraints for %s: %d contradictions", scenario.name, contradictions)
    lines.append(f"contradictions: {contradictions}")
    return CommandResult("\n".join(lines), 1 if contradictions else 0)
