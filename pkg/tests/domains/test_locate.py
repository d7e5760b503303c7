import random

import pytest

from conetile.domains import (
    DomainError,
    DomainResult,
    PointOnBoundaryError,
    Word,
    build_domain,
    enumerate_tiles,
    locate,
)
from conetile.geometry import Cone2, LatMat, Ray, Vector, apply, apply_cone, cone_contains
from conetile.groups import GroupKind, GroupProfile, classify


def _random_interior_points(cone: Cone2, count: int, seed: int) -> list[Vector]:
    rng = random.Random(seed)
    points: list[Vector] = []
    while len(points) < count:
        p = Vector.of(rng.randint(-1000, 1000), rng.randint(-1000, 1000), cone.d)
        if cone_contains(cone, p, strict=True):
            points.append(p)
    return points


def test_point_inside_domain(dihedral_domain: DomainResult, dihedral_profile: GroupProfile) -> None:
    assert locate(dihedral_domain, dihedral_profile, Vector.of(-1, 20, 2)) == Word(0)


def test_all_ones_lies_in_the_involution_translate(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    word = locate(dihedral_domain, dihedral_profile, Vector.of(1, 1, 2))

    assert word == Word(0, True)
    assert str(word) == "(k=0, flip)"


def test_shared_edge_resolves_to_smaller_word(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    word = locate(dihedral_domain, dihedral_profile, Ray.of(1, 0, 2))

    assert word == Word(-1)
    assert str(word) == "(k=-1)"


def test_cyclic_location(cyclic_domain: DomainResult, cyclic_profile: GroupProfile) -> None:
    assert locate(cyclic_domain, cyclic_profile, Vector.of(1, 1, 2)) == Word(-1)
    assert locate(cyclic_domain, cyclic_profile, Vector.of(-1, 10, 2)) == Word(0)


def test_far_points_need_many_steps(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    f = dihedral_profile.generator
    point = apply(f**12, Vector.of(-1, 20, 2))

    assert locate(dihedral_domain, dihedral_profile, point) == Word(12)


def test_finite_cases(mov_oguiso: Cone2, tau1: LatMat) -> None:
    profile = classify([tau1], mov_oguiso)
    dr = build_domain(profile, mov_oguiso)
    trivial = GroupProfile(kind=GroupKind.TRIVIAL)

    assert locate(dr, profile, Vector.of(3, 1, 2)) == Word(0)
    assert locate(dr, profile, Vector.of(-1, 8, 2)) == Word(0, True)
    assert locate(build_domain(trivial, mov_oguiso), trivial, Vector.of(1, 3, 2)) == Word(0)


def test_boundary_points_are_rejected(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    with pytest.raises(PointOnBoundaryError):
        locate(dihedral_domain, dihedral_profile, mov_oguiso.r2)


def test_outside_points_are_rejected(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    with pytest.raises(DomainError, match="outside"):
        locate(dihedral_domain, dihedral_profile, Vector.of(-1, -1, 2))


def test_random_points_land_in_their_tile(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    tiles = enumerate_tiles(dihedral_domain, dihedral_profile, 8)

    for p in _random_interior_points(mov_oguiso, 1000, seed=20240611):
        word = locate(dihedral_domain, dihedral_profile, p)
        element = dihedral_profile.element(word.k, word.flip)

        assert cone_contains(apply_cone(element, dihedral_domain.pi), p)
        assert cone_contains(dihedral_domain.pi, apply(element.inverse(), p))
        others = [t for t in tiles if t.word != word]
        assert not any(cone_contains(t.cone, p, strict=True) for t in others)
