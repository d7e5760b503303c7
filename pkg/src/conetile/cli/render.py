import math
import xml.etree.ElementTree as ET
from collections.abc import Sequence
from dataclasses import dataclass

from conetile.domains import DomainResult, Tile, Word
from conetile.geometry import Cone2, Ray

SVG_NS = "http://www.w3.org/2000/svg"

_FILLS = ("#c6dbef", "#fdd0a2")
_DOMAIN_FILL = "#6baed6"


@dataclass(frozen=True, slots=True)
class RenderConfig:
    size: int = 480
    radius: float = 200.0


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def _endpoint(ray: Ray, config: RenderConfig) -> tuple[str, str]:
    """The point where the ray crosses the unit circle, in SVG coordinates."""
    u, v = float(ray.u), float(ray.v)
    norm = math.hypot(u, v)
    center = config.size / 2
    return (
        _fmt(center + config.radius * u / norm),
        _fmt(center - config.radius * v / norm),
    )


def _wedge_path(cone: Cone2, config: RenderConfig) -> str:
    center = _fmt(config.size / 2)
    x1, y1 = _endpoint(cone.r1, config)
    x2, y2 = _endpoint(cone.r2, config)
    r = _fmt(config.radius)
    return f"M {center},{center} L {x1},{y1} A {r},{r} 0 0 0 {x2},{y2} Z"


def render_tiling(
    dr: DomainResult, tiles: Sequence[Tile], config: RenderConfig | None = None
) -> str:
    """
    Draws the translates as wedges of the unit disk.

    The acted-on cone's boundary rays are drawn as lines and the fundamental
    domain is shaded. Coordinates are rounded to two decimals, so the output
    is byte-identical for identical input.
    """
    config = config or RenderConfig()
    size = str(config.size)
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": size,
            "height": size,
            "viewBox": f"0 0 {size} {size}",
        },
    )
    ET.SubElement(root, "title").text = f"{dr.case.name} tiling of {dr.cone}"

    tiles_group = ET.SubElement(root, "g", {"stroke": "#08306b", "stroke-width": "0.5"})
    for tile in tiles:
        is_domain = tile.word == Word(0)
        ET.SubElement(
            tiles_group,
            "path",
            {
                "class": "tile domain" if is_domain else "tile",
                "data-word": str(tile.word),
                "fill": _DOMAIN_FILL if is_domain else _FILLS[tile.word.flip],
                "d": _wedge_path(tile.cone, config),
            },
        )

    center = _fmt(config.size / 2)
    boundary_group = ET.SubElement(root, "g", {"stroke": "#cb181d", "stroke-width": "2"})
    for ray in dr.cone.rays:
        x, y = _endpoint(ray, config)
        ET.SubElement(
            boundary_group,
            "line",
            {"class": "boundary", "x1": center, "y1": center, "x2": x, "y2": y},
        )

    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
