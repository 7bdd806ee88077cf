"""SVG 1.1 drawing of a domain with its slices and guards."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

from .geometry import SCALE, RectilinearDomain
from .pixelation import PixelationGraph

UNIT = 40
MARGIN = 20


def _fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{float(v):g}"


def render_svg(d: RectilinearDomain, g: PixelationGraph | None = None, segments=(), points=(),
               unit: int = UNIT) -> str:
    """Outline, dotted slice grid, dashed mobile guards and filled point guards.

    ``segments`` are (x1, y1, x2, y2) and ``points`` (x, y), both in
    original units.
    """
    box = d.bbox()
    x0, y1 = Fraction(box.xmin, SCALE), Fraction(box.ymax, SCALE)
    width = Fraction(box.xmax - box.xmin, SCALE) * unit + 2 * MARGIN
    height = Fraction(box.ymax - box.ymin, SCALE) * unit + 2 * MARGIN

    def sx(x) -> str:
        return _fmt((Fraction(x) - x0) * unit + MARGIN)

    def sy(y) -> str:
        return _fmt((y1 - Fraction(y)) * unit + MARGIN)

    root = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg", "version": "1.1",
        "width": _fmt(width), "height": _fmt(height),
        "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
    })
    pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in d.original_coords())
    ET.SubElement(root, "polygon", {"points": pts, "fill": "#f4f4f4", "stroke": "black", "stroke-width": "2"})

    if g is not None:
        grid = ET.SubElement(root, "g", {"stroke": "#888", "stroke-dasharray": "2,3", "fill": "none"})
        for s in list(g.hslices.slices) + list(g.vslices.slices):
            r = s.rect
            ET.SubElement(grid, "rect", {
                "x": sx(Fraction(r.xmin, SCALE)), "y": sy(Fraction(r.ymax, SCALE)),
                "width": _fmt(Fraction(r.xmax - r.xmin, SCALE) * unit),
                "height": _fmt(Fraction(r.ymax - r.ymin, SCALE) * unit),
            })

    guards = ET.SubElement(root, "g", {"stroke": "#1f5fbf", "stroke-width": "2", "stroke-dasharray": "8,4"})
    for a, b, c, e in segments:
        ET.SubElement(guards, "line", {"x1": sx(a), "y1": sy(b), "x2": sx(c), "y2": sy(e)})

    disks = ET.SubElement(root, "g", {"fill": "#c0392b"})
    for x, y in points:
        ET.SubElement(disks, "circle", {"cx": sx(x), "cy": sy(y), "r": _fmt(Fraction(unit, 8))})

    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"
