import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from conetile.domains.result import DomainCase, DomainResult, Word
from conetile.geometry import Cone2, Ray, apply_cone, cross, is_rational_ray
from conetile.groups import GroupProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TilingConfig:
    depth: int = 8
    max_workers: int = 4
    convergence: bool = True


@dataclass(frozen=True, slots=True)
class Tile:
    word: Word
    cone: Cone2


@dataclass(frozen=True, slots=True, order=True)
class Violation:
    check: str
    words: tuple[Word, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.check} {' '.join(str(w) for w in self.words)}: {self.message}"


@dataclass(frozen=True, slots=True)
class TilingReport:
    depth: int
    tiles: Sequence[Tile]
    violations: Sequence[Violation] = ()
    frontier: tuple[Ray, Ray] | None = None
    checks: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.passed:
            return f"PASS, {len(self.tiles)} tiles"
        return f"FAIL, {len(self.violations)} violations, {len(self.tiles)} tiles"

    def by_check(self) -> dict[str, list[Violation]]:
        groups: dict[str, list[Violation]] = {}
        for violation in self.violations:
            groups.setdefault(violation.check, []).append(violation)
        return groups


def clockwise_of(p: Ray, q: Ray) -> bool:
    """True iff p lies strictly clockwise of q inside a common half-plane."""
    return cross(p, q).sign() > 0


def _angular(first: Tile, second: Tile) -> int:
    if first.cone.r1 == second.cone.r1:
        return -cross(first.cone.r2, second.cone.r2).sign()
    return -cross(first.cone.r1, second.cone.r1).sign()


def enumerate_tiles(dr: DomainResult, profile: GroupProfile, depth: int) -> list[Tile]:
    """Translates f^k tau^flip of the domain for |k| <= depth, in clockwise order."""
    if depth < 0:
        raise ValueError(f"Depth must be non-negative, got {depth}")
    if dr.case is DomainCase.FINITE_TRIVIAL:
        words = [Word(0)]
    elif dr.case is DomainCase.FINITE_INVOLUTION:
        words = [Word(0), Word(0, True)]
    elif dr.case is DomainCase.CYCLIC:
        words = [Word(k) for k in range(-depth, depth + 1)]
    else:
        words = [Word(k, flip) for k in range(-depth, depth + 1) for flip in (False, True)]

    tiles = [Tile(word, apply_cone(profile.element(word.k, word.flip), dr.pi)) for word in words]
    logger.debug("Enumerated %d tiles at depth %d", len(tiles), depth)
    return sorted(tiles, key=cmp_to_key(_angular))


class PairRunner:
    def __init__(
        self,
        max_workers: int = 4,
        progress_callback: Callable[[int, int, list[Violation]], None] | None = None,
    ):
        self.max_workers = max_workers
        self.progress_callback = progress_callback

    def run(
        self, tiles: Sequence[Tile], check: Callable[[Tile, Tile], list[Violation]]
    ) -> list[Violation]:
        pairs = list(combinations(tiles, 2))
        total = len(pairs)
        completed = 0
        violations: list[Violation] = []

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = [executor.submit(check, first, second) for first, second in pairs]
            for future in as_completed(futures):
                result = future.result()
                completed += 1
                if self.progress_callback:
                    self.progress_callback(completed, total, result)
                violations.extend(result)

        return sorted(violations)


def check_disjoint(first: Tile, second: Tile) -> list[Violation]:
    if not first.cone.interiors_meet(second.cone):
        return []
    words = tuple(sorted((first.word, second.word)))
    return [Violation("disjointness", words, f"{first.cone} meets {second.cone}")]


def _check_adjacency(tiles: Sequence[Tile]) -> list[Violation]:
    violations = []
    for before, after in zip(tiles, tiles[1:], strict=False):
        if before.cone.r2 == after.cone.r1:
            continue
        kind = "gap" if clockwise_of(before.cone.r2, after.cone.r1) else "overlap"
        violations.append(
            Violation(
                "adjacency",
                (before.word, after.word),
                f"{kind} between {before.cone.r2} and {after.cone.r1}",
            )
        )
    return violations


def _check_weak_overlaps(tiles: Sequence[Tile]) -> list[Violation]:
    violations = []
    for before, after in zip(tiles, tiles[1:], strict=False):
        for ray in before.cone.shared_rays(after.cone):
            if not is_rational_ray(ray):
                violations.append(
                    Violation(
                        "weak-overlap",
                        (before.word, after.word),
                        f"shared ray {ray} is irrational",
                    )
                )
    return violations


def _check_containment(tiles: Sequence[Tile], cone: Cone2) -> list[Violation]:
    return [
        Violation("containment", (tile.word,), f"{tile.cone} leaves {cone}")
        for tile in tiles
        if not cone.contains_cone(tile.cone)
    ]


def _check_coverage(tiles: Sequence[Tile], cone: Cone2) -> list[Violation]:
    violations = []
    if tiles[0].cone.r1 != cone.r1:
        violations.append(
            Violation("coverage", (tiles[0].word,), f"{cone.r1} is not reached by the tiles")
        )
    if tiles[-1].cone.r2 != cone.r2:
        violations.append(
            Violation("coverage", (tiles[-1].word,), f"{cone.r2} is not reached by the tiles")
        )
    return violations


def _frontier(tiles: Sequence[Tile]) -> tuple[Ray, Ray]:
    low = tiles[0].cone.r1
    high = tiles[0].cone.r2
    for tile in tiles[1:]:
        if clockwise_of(tile.cone.r1, low):
            low = tile.cone.r1
        if clockwise_of(high, tile.cone.r2):
            high = tile.cone.r2
    return low, high


def _check_convergence(tiles: Sequence[Tile], cone: Cone2, depth: int) -> list[Violation]:
    """
    The union of translates up to word length k must widen strictly with k
    while staying strictly inside the acted-on cone.
    """
    violations = []
    previous = None
    for k in range(depth + 1):
        layer = [tile for tile in tiles if abs(tile.word.k) <= k]
        low, high = _frontier(layer)
        words = (Word(-k), Word(k))
        if not (clockwise_of(cone.r1, low) and clockwise_of(high, cone.r2)):
            violations.append(
                Violation("convergence", words, f"frontier {low}, {high} reaches the boundary")
            )
        if previous is not None:
            prev_low, prev_high = previous
            if not (clockwise_of(low, prev_low) and clockwise_of(prev_high, high)):
                violations.append(
                    Violation("convergence", words, f"frontier {low}, {high} did not widen")
                )
        previous = (low, high)
    return violations


def verify_tiling(
    dr: DomainResult,
    profile: GroupProfile,
    cone: Cone2,
    depth: int | None = None,
    config: TilingConfig | None = None,
    progress_callback: Callable[[int, int, list[Violation]], None] | None = None,
) -> TilingReport:
    config = config or TilingConfig()
    depth = config.depth if depth is None else depth
    if depth < 1:
        raise ValueError(f"Depth must be at least 1, got {depth}")

    tiles = enumerate_tiles(dr, profile, depth)
    runner = PairRunner(max_workers=config.max_workers, progress_callback=progress_callback)
    violations = runner.run(tiles, check_disjoint)
    violations += _check_adjacency(tiles)
    violations += _check_containment(tiles, cone)
    checks = ["disjointness", "adjacency", "containment"]

    if dr.case in (DomainCase.FINITE_TRIVIAL, DomainCase.FINITE_INVOLUTION):
        violations += _check_weak_overlaps(tiles)
        violations += _check_coverage(tiles, cone)
        checks += ["weak-overlap", "coverage"]
    elif config.convergence:
        violations += _check_convergence(tiles, cone, depth)
        checks.append("convergence")

    violations.sort()
    logger.info(
        "Verified %d tiles at depth %d: %d violations", len(tiles), depth, len(violations)
    )
    return TilingReport(
        depth=depth,
        tiles=tiles,
        violations=violations,
        frontier=_frontier(tiles),
        checks=tuple(checks),
    )
