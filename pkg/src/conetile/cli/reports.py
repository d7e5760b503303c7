from collections.abc import Sequence

from conetile.domains import DomainResult, TilingReport
from conetile.groups import ArithmeticCertificate, FindingsReport, GroupProfile


def format_findings(report: FindingsReport) -> str:
    lines = [str(finding) for finding in report.findings]
    summary = report.get_summary()
    lines.append(f"errors: {summary.errors}, infos: {summary.infos}")
    return "\n".join(lines)


def format_profile(
    profile: GroupProfile, action: str, certificate: ArithmeticCertificate | None = None
) -> str:
    lines = [f"action: {action}", f"kind: {profile.kind.name}"]
    if profile.plus_generator is not None:
        lines += [
            f"generator: {profile.plus_generator}",
            f"trace: {profile.plus_generator.trace}",
            f"alpha: {profile.alpha}",
        ]
    if profile.minus_rep is not None:
        lines.append(f"minus_rep: {profile.minus_rep}")
    if certificate is not None:
        for check in certificate.checks:
            lines.append(f"certificate {check.name}: {'ok' if check.passed else 'FAILED'}")
    return "\n".join(lines)


def format_domain(dr: DomainResult, notes: Sequence[str] = ()) -> str:
    lines = [
        f"case: {dr.case.name}",
        f"cone: {dr.cone}",
        f"seed: {dr.seed}",
        f"pi: {dr.pi}",
    ]
    for name, vector in dr.witnesses().items():
        lines.append(f"{name}: {vector.ray()} = {vector}")
    lines.append(f"integral: {'yes' if dr.is_integral() else 'no'}")
    lines += [f"note: {note}" for note in notes]
    return "\n".join(lines)


def format_tiling(report: TilingReport) -> str:
    lines = [f"depth: {report.depth}"]
    lines += [f"tile {tile.word}: {tile.cone}" for tile in report.tiles]
    failing = report.by_check()
    for check in report.checks:
        count = len(failing.get(check, []))
        lines.append(f"check {check}: {'ok' if not count else f'{count} violations'}")
    lines += [f"violation {violation}" for violation in report.violations]
    if report.frontier is not None:
        low, high = report.frontier
        lines.append(f"frontier: {low}, {high}")
    lines.append(report.summary())
    return "\n".join(lines)
