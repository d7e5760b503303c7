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
from conetile.cli.render import RenderConfig, render_tiling
from conetile.cli.scenario_file import bundled_names, dump_scenario, load_scenario, parse_scenario

__all__ = [
    "CommandResult",
    "RenderConfig",
    "bundled_names",
    "cmd_classify",
    "cmd_constraints",
    "cmd_domain",
    "cmd_family",
    "cmd_locate",
    "cmd_render",
    "cmd_tile",
    "cmd_validate",
    "dump_scenario",
    "load_scenario",
    "parse_scenario",
    "render_tiling",
]
