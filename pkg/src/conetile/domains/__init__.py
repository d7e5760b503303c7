from conetile.domains.build import build_domain, default_seed, weak_domain_finite
from conetile.domains.locate import locate
from conetile.domains.result import (
    DomainCase,
    DomainError,
    DomainResult,
    PointOnBoundaryError,
    Word,
)
from conetile.domains.tiling import (
    PairRunner,
    Tile,
    TilingConfig,
    TilingReport,
    Violation,
    check_disjoint,
    enumerate_tiles,
    verify_tiling,
)

__all__ = [
    "DomainCase",
    "DomainError",
    "DomainResult",
    "PairRunner",
    "PointOnBoundaryError",
    "Tile",
    "TilingConfig",
    "TilingReport",
    "Violation",
    "Word",
    "build_domain",
    "check_disjoint",
    "default_seed",
    "enumerate_tiles",
    "locate",
    "verify_tiling",
    "weak_domain_finite",
]
