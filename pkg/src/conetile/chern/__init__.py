from conetile.chern.forms import (
    Basis,
    ChernPreconditionError,
    ChernProduct,
    LinFunc,
    SymForm,
    functional_in_basis,
    integral_basis,
    matrix_in_basis,
    middle_positivity,
    pullback,
)
from conetile.chern.obstructions import (
    C2Verdict,
    FormInvariance,
    VanishingCertificate,
    Verdict,
    c2_obstruction,
    check_form_invariance,
    cn1_must_vanish,
    forced_vanishing,
    product_must_vanish,
)

__all__ = [
    "Basis",
    "C2Verdict",
    "ChernPreconditionError",
    "ChernProduct",
    "FormInvariance",
    "LinFunc",
    "SymForm",
    "VanishingCertificate",
    "Verdict",
    "c2_obstruction",
    "check_form_invariance",
    "cn1_must_vanish",
    "forced_vanishing",
    "functional_in_basis",
    "integral_basis",
    "matrix_in_basis",
    "middle_positivity",
    "product_must_vanish",
    "pullback",
]
