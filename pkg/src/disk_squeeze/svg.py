"""Static SVG pictures of the unit disk.

The disk fills a 1000 x 1000 view box.  Every picture carries the JSON
report it was drawn from in a leading comment.
"""

from __future__ import annotations

import math

from .geometry import Circle, Line

SIZE = 1000.0
HALF = SIZE / 2.0

CURVE_STYLE = 'fill="none" stroke="#1f4e9c" stroke-width="3"'
REGION_STYLE = 'fill="#3b7dd8" fill-opacity="0.4" stroke="#1f4e9c" stroke-width="2"'
POINT_STYLE = 'fill="#c0392b"'


def _n(x: float) -> str:
    return format(x, ".6f")


def to_canvas(z: complex) -> tuple[float, float]:
    return HALF * (1.0 + z.real), HALF * (1.0 - z.imag)


def _xy(z: complex) -> str:
    x, y = to_canvas(z)
    return f"{_n(x)} {_n(y)}"


class Picture:
    def __init__(self, report_json: str):
        self.report_json = report_json
        self.items = []

    def carrier(self, C):
        """Stroke a full circle or line, clipped to the disk."""
        if isinstance(C, Circle):
            x, y = to_canvas(C.center)
            self.items.append(
                f'<circle cx="{_n(x)}" cy="{_n(y)}" r="{_n(HALF * C.radius)}" {CURVE_STYLE} clip-path="url(#disk)"/>'
            )
        else:
            a = C.point - 4.0 * C.direction
            b = C.point + 4.0 * C.direction
            self.items.append(f'<path d="M {_xy(a)} L {_xy(b)}" {CURVE_STYLE} clip-path="url(#disk)"/>')

    def polyline(self, pts):
        if len(pts) < 2:
            return
        d = "M " + " L ".join(_xy(p) for p in pts)
        self.items.append(f'<path d="{d}" {CURVE_STYLE}/>')

    def point(self, z: complex, r: float = 6.0):
        x, y = to_canvas(z)
        self.items.append(f'<circle cx="{_n(x)}" cy="{_n(y)}" r="{_n(r)}" {POINT_STYLE}/>')

    def _arc_path(self, edges) -> str:
        parts = ["M " + _xy(edges[0].start)]
        for e in edges:
            if isinstance(e.carrier, Line):
                parts.append("L " + _xy(e.end))
                continue
            sweep = e.sweep()
            r = _n(HALF * e.carrier.radius)
            large = 1 if abs(sweep) > math.pi else 0
            # the canvas y axis points down, so counterclockwise becomes sweep-flag 0
            flag = 0 if sweep > 0 else 1
            parts.append(f"A {r} {r} 0 {large} {flag} {_xy(e.end)}")
        return " ".join(parts)

    def region(self, polygon):
        d = self._arc_path(polygon.edges) + " Z"
        self.items.append(f'<path d="{d}" {REGION_STYLE}/>')

    def arc(self, edge):
        self.items.append(f'<path d="{self._arc_path([edge])}" {CURVE_STYLE}/>')

    def whole_disk(self):
        self.items.append(f'<circle cx="{_n(HALF)}" cy="{_n(HALF)}" r="{_n(HALF)}" {REGION_STYLE}/>')

    def render(self) -> str:
        meta = self.report_json.replace("--", "- -")
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f"<!-- disk-squeeze report\n{meta}-->",
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {int(SIZE)} {int(SIZE)}" '
            f'width="{int(SIZE)}" height="{int(SIZE)}">',
            f'<defs><clipPath id="disk"><circle cx="{_n(HALF)}" cy="{_n(HALF)}" r="{_n(HALF)}"/></clipPath></defs>',
            f'<circle cx="{_n(HALF)}" cy="{_n(HALF)}" r="{_n(HALF - 1.5)}" '
            'fill="none" stroke="#000000" stroke-width="3"/>',
        ]
        lines += self.items
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def embedded_report(svg_text: str) -> str:
    """The JSON text stored in the leading comment."""
    head = "<!-- disk-squeeze report\n"
    i = svg_text.index(head) + len(head)
    j = svg_text.index("-->", i)
    return svg_text[i:j]
