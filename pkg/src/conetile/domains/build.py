import logging

from conetile.domains.result import DomainCase, DomainError, DomainResult, PointOnBoundaryError
from conetile.geometry import Cone2, LatMat, Ray, Vector, apply, cone_contains
from conetile.groups import (
    GroupKind,
    GroupProfile,
    RayMismatchError,
    is_cone_automorphism,
    scaling_factor,
)

logger = logging.getLogger(__name__)


def default_seed(cone: Cone2) -> Vector:
    """The all-ones class, provided it is ample for the cone."""
    seed = Vector.of(1, 1, cone.d)
    if not cone_contains(cone, seed, strict=True):
        raise DomainError(f"Default seed {seed} is not inside {cone}; supply a seed")
    return seed


def _as_seed(seed: Vector | Ray | None, cone: Cone2) -> Vector:
    if seed is None:
        return default_seed(cone)
    vector = seed.vector() if isinstance(seed, Ray) else seed
    if not cone_contains(cone, vector, strict=True):
        raise PointOnBoundaryError(f"Seed {vector} is not strictly inside {cone}")
    return vector


def _check_profile(profile: GroupProfile, cone: Cone2) -> None:
    for element in (profile.generator, profile.involution):
        if not is_cone_automorphism(element, cone):
            raise DomainError(f"Profile element {element} does not preserve {cone}")
    if profile.plus_generator is not None:
        try:
            alpha = scaling_factor(profile.plus_generator, cone)
        except RayMismatchError as e:
            raise DomainError(f"Profile does not match {cone}: {e}") from e
        if alpha != profile.alpha:
            raise DomainError(f"Profile alpha {profile.alpha} differs from {alpha} on {cone}")


def weak_domain_finite(
    cone: Cone2, invol: LatMat | None, seed: Vector | Ray | None = None
) -> DomainResult:
    """
    The half-cone cut out by the fixed class y = x + g x of an involution g.

    Without an involution the whole cone is its own domain.
    """
    x = _as_seed(seed, cone)
    if invol is None:
        return DomainResult(pi=cone, case=DomainCase.FINITE_TRIVIAL, seed=x, cone=cone)
    if invol.det != -1 or not (invol @ invol).is_identity():
        raise DomainError(f"{invol} is not a det -1 involution")
    if not is_cone_automorphism(invol, cone):
        raise DomainError(f"Involution {invol} does not preserve {cone}")

    y = x + apply(invol, x)
    pi = Cone2.spanning(cone.r1, y)
    logger.debug("Weak domain for %s: y = %s, pi = %s", invol, y, pi)
    return DomainResult(pi=pi, case=DomainCase.FINITE_INVOLUTION, seed=x, cone=cone, y=y)


def build_domain(
    profile: GroupProfile, cone: Cone2, seed: Vector | Ray | None = None
) -> DomainResult:
    _check_profile(profile, cone)
    x = _as_seed(seed, cone)

    if profile.kind is GroupKind.TRIVIAL:
        return weak_domain_finite(cone, None, x)
    if profile.kind is GroupKind.ORDER_TWO:
        return weak_domain_finite(cone, profile.involution, x)

    f = profile.generator
    if profile.kind is GroupKind.INFINITE_CYCLIC:
        fx = apply(f, x)
        pi = Cone2.spanning(x, fx)
        logger.info("Cyclic domain %s from seed %s", pi, x)
        return DomainResult(pi=pi, case=DomainCase.CYCLIC, seed=x, cone=cone, z1=x, z2=fx)

    tau = profile.involution
    theta = profile.theta
    z1 = x + apply(tau, x)
    fz1 = apply(f, z1)
    z2 = z1 + fz1
    if apply(tau, z1) != z1 or apply(theta, z1) != fz1 or apply(theta, z2) != z2:
        raise DomainError(f"tau = {tau} and theta = {theta} do not fix z1 = {z1}, z2 = {z2}")
    pi = Cone2.spanning(z1, z2)
    logger.info("Dihedral domain %s with z1 = %s, z2 = %s", pi, z1, z2)
    return DomainResult(pi=pi, case=DomainCase.DIHEDRAL, seed=x, cone=cone, z1=z1, z2=z2)
