from conetile.field.quadratic import (
    QF,
    FieldMismatchError,
    Rational,
    minimal_poly_degree,
    qf_norm,
    qf_sign,
    qf_trace,
    squarefree_decomposition,
)

__all__ = [
    "QF",
    "FieldMismatchError",
    "Rational",
    "minimal_poly_degree",
    "qf_norm",
    "qf_sign",
    "qf_trace",
    "squarefree_decomposition",
]
