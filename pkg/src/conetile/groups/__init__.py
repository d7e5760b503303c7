from conetile.groups.classify import (
    ArithmeticCertificate,
    CertificateCheck,
    ConePreservationError,
    NonHyperbolicGeneratorError,
    RayMismatchError,
    arithmetic_certificate,
    classify,
    fundamental_plus_generator,
    is_cone_automorphism,
    scaling_factor,
    split_by_det,
)
from conetile.groups.family import product_family
from conetile.groups.profile import GroupKind, GroupProfile
from conetile.groups.report import Finding, FindingsReport, FindingsSummary, Severity
from conetile.groups.rules import (
    DEFAULT_RULES,
    ScenarioContext,
    ScenarioRule,
    classify_scenario,
    has_infinite_order_word,
    validate_scenario,
)
from conetile.groups.scenario import (
    Action,
    ActionScenario,
    FormBasis,
    Generator,
    IntersectionData,
    ScenarioError,
    make_scenario,
)

__all__ = [
    "DEFAULT_RULES",
    "Action",
    "ActionScenario",
    "ArithmeticCertificate",
    "CertificateCheck",
    "ConePreservationError",
    "Finding",
    "FindingsReport",
    "FindingsSummary",
    "FormBasis",
    "Generator",
    "GroupKind",
    "GroupProfile",
    "IntersectionData",
    "NonHyperbolicGeneratorError",
    "RayMismatchError",
    "ScenarioContext",
    "ScenarioError",
    "ScenarioRule",
    "Severity",
    "arithmetic_certificate",
    "classify",
    "classify_scenario",
    "fundamental_plus_generator",
    "has_infinite_order_word",
    "is_cone_automorphism",
    "make_scenario",
    "product_family",
    "scaling_factor",
    "split_by_det",
    "validate_scenario",
]
