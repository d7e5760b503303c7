from conetile.chern import (
    SymForm,
    c2_obstruction,
    check_form_invariance,
    cn1_must_vanish,
    forced_vanishing,
    middle_positivity,
)
from conetile.domains import (
    DomainResult,
    TilingReport,
    Word,
    build_domain,
    locate,
    verify_tiling,
    weak_domain_finite,
)
from conetile.field import QF
from conetile.geometry import Cone2, LatMat, Ray, Vector, apply, apply_cone, eigen_data
from conetile.groups import (
    ActionScenario,
    GroupKind,
    GroupProfile,
    classify,
    fundamental_plus_generator,
    is_cone_automorphism,
    product_family,
    split_by_det,
    validate_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "QF",
    "Ray",
    "Vector",
    "Cone2",
    "LatMat",
    "apply",
    "apply_cone",
    "eigen_data",
    "ActionScenario",
    "GroupKind",
    "GroupProfile",
    "is_cone_automorphism",
    "split_by_det",
    "fundamental_plus_generator",
    "classify",
    "validate_scenario",
    "product_family",
    "DomainResult",
    "TilingReport",
    "Word",
    "build_domain",
    "verify_tiling",
    "locate",
    "weak_domain_finite",
    "SymForm",
    "forced_vanishing",
    "check_form_invariance",
    "cn1_must_vanish",
    "c2_obstruction",
    "middle_positivity",
]
