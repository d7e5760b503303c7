import logging

from conetile.domains.result import (
    DomainCase,
    DomainError,
    DomainResult,
    PointOnBoundaryError,
    Word,
)
from conetile.geometry import Cone2, Ray, Vector, apply, apply_cone, cone_contains, cross
from conetile.groups import GroupProfile

logger = logging.getLogger(__name__)

MAX_STEPS = 100_000


def _candidates(dr: DomainResult, k: int) -> list[Word]:
    if dr.case is DomainCase.FINITE_TRIVIAL:
        return [Word(0)]
    if dr.case is DomainCase.FINITE_INVOLUTION:
        return [Word(0), Word(0, True)]
    flips = (False, True) if dr.case is DomainCase.DIHEDRAL else (False,)
    return [Word(j, flip) for j in range(k - 1, k + 3) for flip in flips]


def _home(dr: DomainResult, profile: GroupProfile) -> Cone2:
    """Pi together with theta Pi in the dihedral case, Pi otherwise."""
    if dr.case is DomainCase.DIHEDRAL and dr.z1 is not None:
        return Cone2.spanning(dr.z1, apply(profile.generator, dr.z1))
    return dr.pi


def locate(dr: DomainResult, profile: GroupProfile, p: Ray | Vector) -> Word:
    """
    The smallest word (k, flip) whose translate f^k tau^flip Pi contains p.

    Infinite actions drive p into the home cone with f or its inverse, counting
    the steps in k; the tiles around the landing spot are then tested exactly.
    """
    point = p.vector() if isinstance(p, Ray) else p
    if not cone_contains(dr.cone, point, strict=True):
        if cone_contains(dr.cone, point):
            raise PointOnBoundaryError(f"{point} lies on the boundary of {dr.cone}")
        raise DomainError(f"{point} lies outside {dr.cone}")

    k = 0
    if dr.case in (DomainCase.CYCLIC, DomainCase.DIHEDRAL):
        home = _home(dr, profile)
        f, f_inv = profile.generator, profile.generator.inverse()
        q = point
        for _ in range(MAX_STEPS):
            if cross(q, home.r1).sign() > 0:
                q, k = apply(f, q), k - 1
            elif cross(home.r2, q).sign() > 0:
                q, k = apply(f_inv, q), k + 1
            else:
                break
        else:
            raise DomainError(f"{point} did not reach {home} within {MAX_STEPS} steps")
        logger.debug("Located %s near k = %d", point, k)

    for word in _candidates(dr, k):
        tile = apply_cone(profile.element(word.k, word.flip), dr.pi)
        if cone_contains(tile, point):
            return word
    raise DomainError(f"No tile near k = {k} contains {point}")
