import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from conetile import __version__
from conetile.cli.commands import (
    CommandResult,
    cmd_classify,
    cmd_constraints,
    cmd_domain,
    cmd_family,
    cmd_locate,
    cmd_render,
    cmd_tile,
    cmd_validate,
)
from conetile.cli.render import RenderConfig
from conetile.cli.scenario_file import load_scenario
from conetile.domains import TilingConfig
from conetile.geometry import Vector
from conetile.groups import Action, ActionScenario

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2

_SCENARIO_COMMANDS = ("validate", "classify", "domain", "tile", "locate", "constraints", "render")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conetile",
        description="Cone actions and fundamental domains for Picard-number-two Calabi-Yau data",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    for name in _SCENARIO_COMMANDS:
        sub = commands.add_parser(name)
        sub.add_argument("scenario", help="scenario file path or bundled scenario name")
        if name in ("validate", "constraints"):
            continue
        sub.add_argument(
            "--action",
            choices=[a.value for a in Action],
            default=Action.BIR.value,
            help="aut acts on Nef, bir on Mov (default: bir)",
        )
        if name == "classify":
            continue
        sub.add_argument("--seed", help='fundamental domain seed "(a,b)"')
        if name in ("tile", "render"):
            sub.add_argument("--depth", type=int, default=TilingConfig().depth)
        if name == "tile":
            sub.add_argument("--workers", type=int, default=TilingConfig().max_workers)
        if name == "locate":
            sub.add_argument("--point", required=True, help='point "(a,b)" in the acted-on cone')
        if name == "render":
            sub.add_argument("--out", type=Path, help="SVG output file (default: stdout)")
            sub.add_argument("--size", type=int, default=RenderConfig().size)

    family = commands.add_parser("family", help="scenario of the P^n x P^n family")
    family.add_argument("n", type=int)
    family.add_argument("--out", type=Path, help="scenario output file (default: stdout)")
    return parser


@dataclass(frozen=True, slots=True)
class Inputs:
    scenario: ActionScenario
    action: Action = Action.BIR
    seed: Vector | None = None
    point: Vector | None = None


def _parse_inputs(args: argparse.Namespace) -> Inputs:
    """Everything read from the command line or disk; failures here are usage errors."""
    scenario = load_scenario(args.scenario)
    action = Action(getattr(args, "action", Action.BIR.value))
    seed = getattr(args, "seed", None)
    point = getattr(args, "point", None)
    if getattr(args, "depth", 0) < 0:
        raise ValueError(f"Depth must be non-negative, got {args.depth}")
    return Inputs(
        scenario=scenario,
        action=action,
        seed=None if seed is None else Vector.parse(seed, scenario.d),
        point=None if point is None else Vector.parse(point, scenario.d),
    )


def _dispatch(args: argparse.Namespace, inputs: Inputs) -> CommandResult:
    scenario, action, seed = inputs.scenario, inputs.action, inputs.seed
    match args.command:
        case "validate":
            return cmd_validate(scenario)
        case "constraints":
            return cmd_constraints(scenario)
        case "classify":
            return cmd_classify(scenario, action)
        case "domain":
            return cmd_domain(scenario, action, seed)
        case "tile":
            config = TilingConfig(depth=args.depth, max_workers=args.workers)
            return cmd_tile(scenario, action, seed, config)
        case "locate":
            assert inputs.point is not None
            return cmd_locate(scenario, inputs.point, action, seed)
        case _:
            default = RenderConfig()
            config = RenderConfig(size=args.size, radius=args.size * default.radius / default.size)
            return cmd_render(scenario, action, args.depth, seed, config)


def _write(result: CommandResult, out: Path | None) -> None:
    text = result.output if result.output.endswith("\n") else result.output + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")
    print(f"wrote {out}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        inputs = None if args.command == "family" else _parse_inputs(args)
        result = cmd_family(args.n) if inputs is None else None
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if inputs is not None:
        try:
            result = _dispatch(args, inputs)
        except ValueError as e:
            logger.debug("Command %s failed", args.command, exc_info=True)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAILURE
    assert result is not None

    try:
        _write(result, getattr(args, "out", None))
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
