import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import Protocol

from conetile.geometry import LatMat, is_rational_ray
from conetile.groups.classify import arithmetic_certificate, classify
from conetile.groups.profile import GroupProfile
from conetile.groups.report import Finding, FindingsReport, Severity
from conetile.groups.scenario import Action, ActionScenario

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ScenarioContext:
    """A scenario with both actions classified; failed classifications carry their reason."""

    scenario: ActionScenario
    profiles: dict[Action, GroupProfile] = field(default_factory=dict)
    failures: dict[Action, str] = field(default_factory=dict)

    def is_infinite(self, action: Action) -> bool:
        profile = self.profiles.get(action)
        if profile is not None:
            return profile.is_infinite
        return has_infinite_order_word(self.scenario.action_generators(action))


class ScenarioRule(Protocol):
    name: str

    def check(self, context: ScenarioContext) -> list[Finding]:
        """
        Inspects a classified scenario.

        Returns:
            findings, empty when the rule has nothing to report
        """
        ...

    def describe(self) -> str:
        """Returns a human-readable statement of the rule."""
        ...


def has_infinite_order_word(gens: Sequence[LatMat]) -> bool:
    """Looks for an infinite-order element among the generators and their pairwise products."""
    pool = list(gens) + [g.inverse() for g in gens]
    return any(g.order() is None for g in pool) or any(
        (g @ h).order() is None for g, h in product(pool, repeat=2)
    )


def same_cyclic_group(first: GroupProfile, second: GroupProfile) -> bool:
    f, g = first.generator, second.generator
    return f == g or f == g.inverse()


@dataclass(frozen=True, slots=True)
class PreservationRule:
    name: str = "p"

    def check(self, context: ScenarioContext) -> list[Finding]:
        return [
            Finding(self.name, Severity.ERROR, failure)
            for failure in context.scenario.preservation_failures()
        ]

    def describe(self) -> str:
        return "Automorphisms preserve Nef and Mov; birational generators preserve Mov"


@dataclass(frozen=True, slots=True)
class RationalMovRayRule:
    name: str = "a"

    def check(self, context: ScenarioContext) -> list[Finding]:
        rational = [ray for ray in context.scenario.mov.rays if is_rational_ray(ray)]
        if not rational:
            return [Finding(self.name, Severity.INFO, "both mov boundary rays are irrational")]
        if context.is_infinite(Action.BIR):
            return [
                Finding(
                    self.name,
                    Severity.ERROR,
                    f"mov boundary ray {rational[0]} is rational but the birational action "
                    "is infinite",
                )
            ]
        return []

    def describe(self) -> str:
        return "A rational boundary ray of Mov forces a finite birational action"


@dataclass(frozen=True, slots=True)
class RationalNefRayRule:
    name: str = "b"

    def check(self, context: ScenarioContext) -> list[Finding]:
        if not context.is_infinite(Action.AUT):
            return []
        findings = []
        rational = [ray for ray in context.scenario.nef.rays if is_rational_ray(ray)]
        if rational:
            findings.append(
                Finding(
                    self.name,
                    Severity.ERROR,
                    f"nef boundary ray {rational[0]} is rational but the automorphism action "
                    "is infinite",
                )
            )
        n = context.scenario.n
        if n is not None and n % 2:
            findings.append(
                Finding(
                    self.name,
                    Severity.ERROR,
                    f"dimension n = {n} is odd but the automorphism action is infinite",
                )
            )
        return findings

    def describe(self) -> str:
        return "An infinite automorphism action needs irrational nef rays and even dimension"


@dataclass(frozen=True, slots=True)
class SharedBoundaryRule:
    name: str = "c"

    def check(self, context: ScenarioContext) -> list[Finding]:
        scenario = context.scenario
        shared = scenario.nef.shared_rays(scenario.mov)
        if not shared:
            if scenario.nef_inside_mov_interior():
                return [Finding(self.name, Severity.INFO, "Nef lies inside the interior of Mov")]
            return []

        findings = [
            Finding(
                self.name,
                Severity.INFO,
                f"nef ray {shared[0]} is a boundary ray of Mov, so A+ = B+",
            )
        ]
        aut, bir = context.profiles.get(Action.AUT), context.profiles.get(Action.BIR)
        if aut is not None and bir is not None:
            if same_cyclic_group(aut, bir):
                findings.append(Finding(self.name, Severity.INFO, "plus parts agree"))
            else:
                findings.append(
                    Finding(
                        self.name,
                        Severity.ERROR,
                        f"plus parts differ: A+ = <{aut.generator}>, B+ = <{bir.generator}>",
                    )
                )
        n = scenario.n
        if n is not None and n % 2 and context.is_infinite(Action.BIR):
            findings.append(
                Finding(
                    self.name,
                    Severity.ERROR,
                    f"dimension n = {n} is odd and Nef meets the boundary of Mov, "
                    "but the birational action is infinite",
                )
            )
        return findings

    def describe(self) -> str:
        return "A nef ray on the boundary of Mov forces A+ = B+"


@dataclass(frozen=True, slots=True)
class InvolutionRule:
    name: str = "d"

    def check(self, context: ScenarioContext) -> list[Finding]:
        return [
            Finding(self.name, Severity.ERROR, f"{g.name} = {g.matrix} has det -1 but g^2 != id")
            for g in context.scenario.generators
            if g.matrix.det == -1 and not (g.matrix @ g.matrix).is_identity()
        ]

    def describe(self) -> str:
        return "Every det -1 element is an involution"


@dataclass(frozen=True, slots=True)
class NefEqualsMovRule:
    name: str = "e"

    def check(self, context: ScenarioContext) -> list[Finding]:
        scenario = context.scenario
        if context.is_infinite(Action.AUT) and scenario.nef != scenario.mov:
            return [
                Finding(
                    self.name,
                    Severity.ERROR,
                    f"the automorphism action is infinite but Nef = {scenario.nef} "
                    f"differs from Mov = {scenario.mov}",
                )
            ]
        return []

    def describe(self) -> str:
        return "An infinite automorphism action forces Nef = Mov"


@dataclass(frozen=True, slots=True)
class CertificateRule:
    name: str = "f"

    def check(self, context: ScenarioContext) -> list[Finding]:
        findings = []
        for action, profile in sorted(context.profiles.items(), key=lambda item: item[0].value):
            if not profile.is_infinite:
                continue
            certificate = arithmetic_certificate(profile, context.scenario.cone(action))
            for check in certificate.checks:
                severity = Severity.INFO if check.passed else Severity.ERROR
                status = "holds" if check.passed else "fails"
                message = f"{action.value} {check.name} {status}: {check.detail}"
                findings.append(Finding(self.name, severity, message))
        return findings

    def describe(self) -> str:
        return "Scaling factors of an infinite action are quadratic units with integral trace"


DEFAULT_RULES: tuple[ScenarioRule, ...] = (
    PreservationRule(),
    RationalMovRayRule(),
    RationalNefRayRule(),
    SharedBoundaryRule(),
    InvolutionRule(),
    NefEqualsMovRule(),
    CertificateRule(),
)


def classify_scenario(scenario: ActionScenario) -> ScenarioContext:
    profiles: dict[Action, GroupProfile] = {}
    failures: dict[Action, str] = {}
    for action in Action:
        try:
            profiles[action] = classify(scenario.action_generators(action), scenario.cone(action))
        except ValueError as e:
            logger.info("Classification of the %s action failed: %s", action.value, e)
            failures[action] = str(e)
    return ScenarioContext(scenario=scenario, profiles=profiles, failures=failures)


def validate_scenario(
    scenario: ActionScenario, rules: Sequence[ScenarioRule] = DEFAULT_RULES
) -> FindingsReport:
    context = classify_scenario(scenario)
    findings = []
    for action in Action:
        if action in context.profiles:
            kind = context.profiles[action].kind.name
            findings.append(Finding("classify", Severity.INFO, f"{action.value} action: {kind}"))
        else:
            reason = context.failures[action]
            findings.append(Finding("classify", Severity.ERROR, f"{action.value} action: {reason}"))
    for rule in rules:
        findings.extend(rule.check(context))
    logger.info("Validated %s with %d findings", scenario.name, len(findings))
    return FindingsReport(findings=findings)
