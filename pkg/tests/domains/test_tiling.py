from dataclasses import replace
from unittest.mock import MagicMock

import mpmath
import pytest

from conetile.domains import (
    DomainCase,
    DomainResult,
    PairRunner,
    Tile,
    TilingConfig,
    Violation,
    Word,
    build_domain,
    check_disjoint,
    enumerate_tiles,
    verify_tiling,
)
from conetile.field import QF
from conetile.geometry import Cone2, LatMat, Ray, Vector, apply, cone_contains
from conetile.groups import GroupKind, GroupProfile, classify

mpmath.mp.dps = 80


def _mp(x: QF) -> mpmath.mpf:
    return mpmath.mpf(x.a.numerator) / x.a.denominator + mpmath.mpf(
        x.b.numerator
    ) / x.b.denominator * mpmath.sqrt(x.d)


def _angle(ray: Ray) -> mpmath.mpf:
    return mpmath.atan2(_mp(ray.v), _mp(ray.u))


def test_dihedral_depth_eight_passes(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    report = verify_tiling(dihedral_domain, dihedral_profile, mov_oguiso, depth=8)

    assert report.passed
    assert report.summary() == "PASS, 34 tiles"
    assert report.checks == ("disjointness", "adjacency", "containment", "convergence")
    assert report.by_check() == {}


def test_dihedral_depth_twenty_passes(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    report = verify_tiling(dihedral_domain, dihedral_profile, mov_oguiso, depth=20)

    assert report.passed
    assert len(report.tiles) == 82


def test_cyclic_tiling_passes(
    cyclic_domain: DomainResult, cyclic_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    report = verify_tiling(cyclic_domain, cyclic_profile, mov_oguiso, depth=5)

    assert report.passed
    assert [tile.word for tile in report.tiles] == [Word(k) for k in range(-5, 6)]


def test_tiles_are_listed_counter_clockwise(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    tiles = enumerate_tiles(dihedral_domain, dihedral_profile, 3)

    assert [tile.word for tile in tiles] == [
        Word(k, flip) for k in range(-3, 4) for flip in (True, False)
    ]
    for before, after in zip(tiles, tiles[1:], strict=False):
        assert before.cone.r2 == after.cone.r1


def test_depth_zero_dihedral_tiles(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    tiles = enumerate_tiles(dihedral_domain, dihedral_profile, 0)

    assert [tile.word for tile in tiles] == [Word(0, True), Word(0)]
    assert tiles[0].cone == Cone2(Ray.of(1, 0, 2), Ray.of(0, 1, 2))
    assert tiles[1].cone == dihedral_domain.pi


def test_frontier_stays_inside_the_cone(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    report = verify_tiling(dihedral_domain, dihedral_profile, mov_oguiso, depth=4)

    assert report.frontier is not None
    low, high = report.frontier
    assert cone_contains(mov_oguiso, low, strict=True)
    assert cone_contains(mov_oguiso, high, strict=True)
    assert low == report.tiles[0].cone.r1
    assert high == report.tiles[-1].cone.r2


def test_trivial_profile_is_a_single_tile(nef_quadrant: Cone2) -> None:
    profile = GroupProfile(kind=GroupKind.TRIVIAL)
    dr = build_domain(profile, nef_quadrant)

    report = verify_tiling(dr, profile, nef_quadrant, depth=1)

    assert report.summary() == "PASS, 1 tiles"
    assert report.checks == (
        "disjointness",
        "adjacency",
        "containment",
        "weak-overlap",
        "coverage",
    )


def test_involution_weak_domain_passes(mov_oguiso: Cone2, tau1: LatMat) -> None:
    profile = classify([tau1], mov_oguiso)
    dr = build_domain(profile, mov_oguiso)

    report = verify_tiling(dr, profile, mov_oguiso, depth=3)

    assert report.passed
    assert [tile.word for tile in report.tiles] == [Word(0), Word(0, True)]
    assert report.tiles[0].cone.r2 == Ray.of(0, 1, 2)


def test_narrow_trivial_domain_fails_coverage(nef_quadrant: Cone2) -> None:
    profile = GroupProfile(kind=GroupKind.TRIVIAL)
    dr = DomainResult(
        pi=Cone2(Ray.of(1, 1, 2), Ray.of(1, 2, 2)),
        case=DomainCase.FINITE_TRIVIAL,
        seed=Vector.of(1, 1, 2),
        cone=nef_quadrant,
    )

    report = verify_tiling(dr, profile, nef_quadrant, depth=1)

    assert not report.passed
    assert len(report.by_check()["coverage"]) == 2
    assert report.summary() == "FAIL, 2 violations, 1 tiles"


def test_narrowed_domain_leaves_gaps(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    z1, z2 = dihedral_domain.z1, dihedral_domain.z2
    assert z1 is not None and z2 is not None
    corrupted = replace(dihedral_domain, pi=Cone2.spanning(z1, z2 + z1))

    report = verify_tiling(corrupted, dihedral_profile, mov_oguiso, depth=2)

    assert not report.passed
    violations = report.by_check()
    assert "disjointness" not in violations
    assert all("gap" in v.message for v in violations["adjacency"])
    assert Violation(
        "adjacency",
        (Word(0), Word(1, True)),
        f"gap between {Ray.of(-6, 37, 2)} and {Ray.of(-12, 71, 2)}",
    ) in violations["adjacency"]


def test_widened_domain_overlaps_its_theta_translate(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    z1 = dihedral_domain.z1
    assert z1 is not None
    fz1 = apply(dihedral_profile.generator, z1)
    corrupted = replace(dihedral_domain, pi=Cone2.spanning(z1, z1 + fz1 * 2))

    report = verify_tiling(corrupted, dihedral_profile, mov_oguiso, depth=2)

    disjointness = report.by_check()["disjointness"]
    assert (Word(0), Word(1, True)) in [v.words for v in disjointness]
    assert any("overlap" in v.message for v in report.by_check()["adjacency"])
    assert report.violations == sorted(report.violations)


def test_depth_must_be_positive(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    with pytest.raises(ValueError, match="at least 1"):
        verify_tiling(dihedral_domain, dihedral_profile, mov_oguiso, depth=0)
    with pytest.raises(ValueError, match="non-negative"):
        enumerate_tiles(dihedral_domain, dihedral_profile, -1)


def test_config_depth_is_used(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile, mov_oguiso: Cone2
) -> None:
    config = TilingConfig(depth=2, max_workers=1, convergence=False)

    report = verify_tiling(dihedral_domain, dihedral_profile, mov_oguiso, config=config)

    assert report.depth == 2
    assert len(report.tiles) == 10
    assert "convergence" not in report.checks


def test_pair_runner_reports_progress(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    tiles = enumerate_tiles(dihedral_domain, dihedral_profile, 2)
    callback = MagicMock()
    runner = PairRunner(max_workers=2, progress_callback=callback)

    violations = runner.run(tiles, check_disjoint)

    assert violations == []
    assert callback.call_count == 45
    completed = [call.args[0] for call in callback.call_args_list]
    assert completed == list(range(1, 46))
    assert all(call.args[1] == 45 for call in callback.call_args_list)


def test_pair_runner_order_does_not_depend_on_workers(
    dihedral_domain: DomainResult, dihedral_profile: GroupProfile
) -> None:
    tiles = enumerate_tiles(dihedral_domain, dihedral_profile, 2)
    wide = Tile(Word(99), Cone2(Ray.of(1, -1, 2), Ray.of(-1, 2, 2)))

    single = PairRunner(max_workers=1).run([*tiles, wide], check_disjoint)
    parallel = PairRunner(max_workers=8).run([*tiles, wide], check_disjoint)

    assert single == parallel
    assert len(single) == len(tiles)


@pytest.mark.parametrize("depth", [1, 3, 6], ids=str)
def test_brute_force_angles_agree(
    depth: int,
    dihedral_domain: DomainResult,
    dihedral_profile: GroupProfile,
    mov_oguiso: Cone2,
) -> None:
    report = verify_tiling(dihedral_domain, dihedral_profile, mov_oguiso, depth=depth)
    intervals = [(_angle(t.cone.r1), _angle(t.cone.r2)) for t in report.tiles]
    tolerance = mpmath.mpf(10) ** -60

    for i, (low, high) in enumerate(intervals):
        assert low < high
        for other_low, other_high in intervals[i + 1 :]:
            assert min(high, other_high) - max(low, other_low) < tolerance

    start, stop = intervals[0][0], intervals[-1][1]
    samples = 997
    for j in range(samples):
        theta = start + (stop - start) * (j + mpmath.mpf(1) / 3) / samples
        covering = sum(1 for low, high in intervals if low < theta < high)
        assert covering == 1
