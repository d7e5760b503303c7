from dataclasses import dataclass
from enum import Enum

from conetile.chern.forms import (
    Basis,
    ChernPreconditionError,
    ChernProduct,
    LinFunc,
    SymForm,
    pullback,
)
from conetile.field import QF
from conetile.geometry import LatMat, eigen_data, ray_eigenvalue


class Verdict(Enum):
    CONTRADICTION = "contradiction"
    NO_OBSTRUCTION = "no_obstruction"


@dataclass(frozen=True, slots=True)
class FormInvariance:
    invariant: bool
    pulled_back: SymForm
    alpha: QF | None = None
    violations: tuple[int, ...] = ()


@dataclass(frozen=True, slots=True)
class VanishingCertificate:
    consistent: bool
    witnesses: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class C2Verdict:
    verdict: Verdict
    x1_power: int
    c2_power: int
    scaling: QF
    reason: str


def _check_alpha(alpha: QF) -> None:
    if alpha.is_rational():
        raise ChernPreconditionError(f"alpha = {alpha} is rational; no infinite-order action")
    if alpha <= 1:
        raise ChernPreconditionError(f"alpha = {alpha} must exceed 1")


def forced_vanishing(n: int, alpha: QF) -> frozenset[int]:
    """Exponents m whose intersection number x1^m . x2^(n-m) must vanish."""
    _check_alpha(alpha)
    return frozenset(m for m in range(n + 1) if 2 * m != n)


def _hyperbolic_scale(matrix: LatMat, d: int) -> QF:
    eigen = eigen_data(matrix, d)
    assert eigen is not None
    return eigen.eigenvalues[0] if matrix.trace > 0 else -eigen.eigenvalues[1]


def check_form_invariance(
    form: SymForm, matrix: LatMat, basis: Basis | None = None
) -> FormInvariance:
    """
    Compares F o M with F exactly.

    When M is hyperbolic and the basis consists of its eigenrays, the coefficients
    that forced_vanishing kills but the form carries are reported as violations.
    """
    pulled = pullback(form, matrix, basis)
    invariant = pulled == form
    eigenbasis = basis is not None and all(
        ray_eigenvalue(matrix, b.ray()) is not None for b in basis
    )
    if not (matrix.is_hyperbolic() and eigenbasis):
        return FormInvariance(invariant=invariant, pulled_back=pulled)

    alpha = _hyperbolic_scale(matrix, form.d)
    violations = tuple(m for m in sorted(forced_vanishing(form.n, alpha)) if form.coeffs[m])
    return FormInvariance(
        invariant=invariant, pulled_back=pulled, alpha=alpha, violations=violations
    )


def cn1_must_vanish(phi: LinFunc, alpha: QF) -> VanishingCertificate:
    """
    An f-invariant pairing with f x1 = alpha x1 and f x2 = x2 / alpha must be zero.

    Each nonzero pairing is returned as a witness of the contradiction
    alpha * (x_i . c) = x_i . c.
    """
    _check_alpha(alpha)
    witnesses = []
    for index, (value, scale) in enumerate(zip(phi.c, (alpha, alpha.inverse()), strict=True)):
        if scale * value != value:
            witnesses.append(
                f"x{index + 1}.c = {value}, but invariance forces ({scale})*({value}) = {value}"
            )
    return VanishingCertificate(consistent=not witnesses, witnesses=tuple(witnesses))


def product_must_vanish(product: ChernProduct, n: int, alpha: QF) -> VanishingCertificate:
    product.check_degree(n)
    return cn1_must_vanish(product.pairing, alpha)


def c2_obstruction(n: int, c2_pairing_positive: bool, alpha: QF) -> C2Verdict:
    """
    Positivity of c2 against an infinite-order automorphism in even dimension n.

    For n = 4k the monomial x1^(2k) . c2^k is positive yet scales by alpha^(2k);
    for n = 4s + 2 the same argument runs with x1^(2s) . c2^(s+1).
    """
    if n % 2:
        raise ChernPreconditionError(f"n = {n} is odd; the automorphism group is already finite")
    _check_alpha(alpha)

    if n % 4 == 0:
        x1_power, c2_power = n // 2, n // 4
    else:
        s = (n - 2) // 4
        x1_power, c2_power = 2 * s, s + 1
    scaling = alpha**x1_power

    if not c2_pairing_positive:
        reason = "c2 positivity not asserted"
        verdict = Verdict.NO_OBSTRUCTION
    elif scaling == 1:
        reason = f"x1^{x1_power}.c2^{c2_power} does not scale under the action"
        verdict = Verdict.NO_OBSTRUCTION
    else:
        reason = (
            f"x1^{x1_power}.c2^{c2_power} > 0, but invariance gives it = "
            f"({scaling})*x1^{x1_power}.c2^{c2_power}"
        )
        verdict = Verdict.CONTRADICTION
    return C2Verdict(
        verdict=verdict, x1_power=x1_power, c2_power=c2_power, scaling=scaling, reason=reason
    )
