import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from conetile.field import QF
from conetile.geometry import Cone2, LatMat, apply, apply_cone, ray_eigenvalue
from conetile.groups.profile import GroupKind, GroupProfile

logger = logging.getLogger(__name__)


class ConePreservationError(ValueError):
    pass


class NonHyperbolicGeneratorError(ValueError):
    pass


class RayMismatchError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class CertificateCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True, slots=True)
class ArithmeticCertificate:
    checks: tuple[CertificateCheck, ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def is_cone_automorphism(matrix: LatMat, cone: Cone2) -> bool:
    return apply_cone(matrix, cone) == cone


def split_by_det(gens: Sequence[LatMat]) -> tuple[list[LatMat], list[LatMat]]:
    plus = [g for g in gens if g.det == 1]
    minus = [g for g in gens if g.det == -1]
    return plus, minus


def scaling_factor(matrix: LatMat, cone: Cone2) -> QF:
    """
    The factor alpha with matrix * y = alpha * y on the counter-clockwise ray r2.

    Both boundary rays must be positive eigenrays of the matrix.
    """
    alpha = ray_eigenvalue(matrix, cone.r2)
    beta = ray_eigenvalue(matrix, cone.r1)
    if alpha is None or beta is None or alpha.sign() <= 0 or beta.sign() <= 0:
        raise RayMismatchError(f"{matrix} does not fix both boundary rays of {cone}")
    return alpha


def fundamental_plus_generator(plus_elements: Sequence[LatMat], cone: Cone2) -> LatMat:
    """
    The generator of the cyclic group spanned by det +1 elements fixing the cone's rays.

    Runs Euclid on the exponents: every element is normalized to alpha > 1,
    then the largest is repeatedly divided by the largest power of the smallest
    that keeps its scaling factor >= 1. Returns the identity for a trivial group.
    """
    pool: list[tuple[LatMat, QF]] = []
    for element in plus_elements:
        if element.det != 1:
            raise ValueError(f"{element} has determinant {element.det}, expected +1")
        alpha = scaling_factor(element, cone)
        if alpha == 1:
            if not element.is_identity():
                raise NonHyperbolicGeneratorError(
                    f"{element} fixes both rays with factor 1 but is not the identity"
                )
            continue
        if alpha < 1:
            element, alpha = element.inverse(), alpha.inverse()
        pool.append((element, alpha))

    while len(pool) > 1:
        pool.sort(key=lambda entry: entry[1])
        small, beta = pool[0]
        large, gamma = pool.pop()
        shrink = small.inverse()
        steps = 0
        while gamma >= beta:
            large, gamma = large @ shrink, gamma / beta
            steps += 1
        logger.debug("Euclid step: divided by %s^%d, remainder factor %s", small, steps, gamma)
        if gamma == 1:
            if not large.is_identity():
                raise NonHyperbolicGeneratorError(
                    f"Remainder {large} has factor 1 but is not the identity"
                )
            continue
        pool.append((large, gamma))

    return pool[0][0] if pool else LatMat.identity()


def classify(gens: Sequence[LatMat], cone: Cone2) -> GroupProfile:
    for g in gens:
        if not is_cone_automorphism(g, cone):
            raise ConePreservationError(f"{g} does not preserve {cone}")

    plus, minus = split_by_det(gens)
    # Products of two reflections land in the plus part and may be its only source.
    candidates = plus + [first @ second for first, second in combinations(minus, 2)]
    generator = fundamental_plus_generator(candidates, cone)
    minus_rep = minus[0] if minus else None

    if generator.is_identity():
        kind = GroupKind.ORDER_TWO if minus_rep is not None else GroupKind.TRIVIAL
        logger.info("Classified %d generators as %s", len(gens), kind.name)
        return GroupProfile(kind=kind, minus_rep=minus_rep)

    kind = GroupKind.INFINITE_DIHEDRAL if minus_rep is not None else GroupKind.INFINITE_CYCLIC
    alpha = scaling_factor(generator, cone)
    logger.info("Classified %d generators as %s with alpha %s", len(gens), kind.name, alpha)
    return GroupProfile(kind=kind, plus_generator=generator, minus_rep=minus_rep, alpha=alpha)


def arithmetic_certificate(profile: GroupProfile, cone: Cone2) -> ArithmeticCertificate:
    """
    Arithmetic facts forced on an infinite action.

    alpha is a quadratic unit with alpha + 1/alpha = tr(f), the boundary rays are
    the eigenrays of f over Q(alpha), and h = y1 + y2 satisfies
    h + f^2 h = (alpha + 1/alpha) f h with y2 recovered as (alpha f h - h) / (alpha^2 - 1).
    """
    if profile.plus_generator is None or profile.alpha is None:
        return ArithmeticCertificate()
    f, alpha = profile.plus_generator, profile.alpha
    sum_with_inverse = alpha + alpha.inverse()

    h = cone.r1.vector() + cone.r2.vector()
    fh = apply(f, h)
    recurrence = h + apply(f, fh) == fh * sum_with_inverse
    recovered = (fh * alpha - h) * (alpha * alpha - 1).inverse() == cone.r2.vector()

    checks = (
        CertificateCheck("degree", alpha.degree() == 2, f"[Q(alpha):Q] = {alpha.degree()}"),
        CertificateCheck("unit", alpha.norm() == 1, f"norm(alpha) = {alpha.norm()}"),
        CertificateCheck(
            "trace",
            sum_with_inverse.is_integer() and sum_with_inverse == f.trace,
            f"alpha + 1/alpha = {sum_with_inverse}, tr(f) = {f.trace}",
        ),
        CertificateCheck(
            "rays_over_q_alpha",
            cone.d == alpha.d,
            f"boundary rays in Q(sqrt({cone.d})), alpha in Q(sqrt({alpha.d}))",
        ),
        CertificateCheck(
            "eigenrays",
            ray_eigenvalue(f, cone.r1) is not None and ray_eigenvalue(f, cone.r2) is not None,
            f"f fixes {cone.r1} and {cone.r2}",
        ),
        CertificateCheck(
            "recurrence", recurrence and recovered, "h + f^2 h = (alpha + 1/alpha) f h"
        ),
    )
    return ArithmeticCertificate(checks=checks)
