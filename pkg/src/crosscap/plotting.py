"""SVG rendering of half-plane configurations and crossing-count graphs.

A plot spec is a window (x_min, x_max, y_max) over the half-plane plus a
list of drawable items:

    {"type": "geodesic", "from": number|"inf", "to": number|"inf"}
    {"type": "point", "x": x, "y": y}
    {"type": "label", "x": x, "y": y, "text": "..."}
    {"type": "function", "r": r, "s": s, "samples": n}   y = |r sinh x + s cosh x|
    {"type": "hline", "y": y}

Rendering is deterministic: fixed canvas, fixed decimal formatting, items
emitted in input order.  Coordinates are checked for finiteness, so no
NaN ever reaches the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError
from .geodesic import Geodesic

_WIDTH = 720.0
_STROKE = ("#336699", "#aa3333", "#222222", "#888888")


@dataclass(frozen=True)
class PlotSpec:
    window: tuple[float, float, float]  # x_min, x_max, y_max
    items: tuple[dict, ...]

    def __post_init__(self):
        x_min, x_max, y_max = self.window
        if not (x_min < x_max and y_max > 0.0):
            raise GeometryError(f"bad plot window {self.window}")


def _fmt(v: float) -> str:
    if not math.isfinite(v):
        raise GeometryError(f"non-finite plot coordinate {v}")
    return f"{v:.4f}"


class _Canvas:
    def __init__(self, x_min, x_max, y_max):
        self.x_min, self.x_max, self.y_max = x_min, x_max, y_max
        self.scale = _WIDTH / (x_max - x_min)
        self.height = y_max * self.scale
        self.parts: list[str] = []

    def px(self, x: float) -> float:
        return (x - self.x_min) * self.scale

    def py(self, y: float) -> float:
        return self.height - y * self.scale

    def line(self, x1, y1, x2, y2, color, dash=False):
        extra = ' stroke-dasharray="6 4"' if dash else ""
        self.parts.append(
            f'<line x1="{_fmt(self.px(x1))}" y1="{_fmt(self.py(y1))}" '
            f'x2="{_fmt(self.px(x2))}" y2="{_fmt(self.py(y2))}" '
            f'stroke="{color}" stroke-width="1.5" fill="none"{extra}/>'
        )

    def arc(self, c, r, color):
        # upper semicircle centered (c, 0), drawn left endpoint to right
        self.parts.append(
            f'<path d="M {_fmt(self.px(c - r))} {_fmt(self.py(0.0))} '
            f'A {_fmt(r * self.scale)} {_fmt(r * self.scale)} 0 0 1 '
            f'{_fmt(self.px(c + r))} {_fmt(self.py(0.0))}" '
            f'stroke="{color}" stroke-width="1.5" fill="none"/>'
        )

    def polyline(self, pts, color):
        coords = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in pts)
        self.parts.append(f'<polyline points="{coords}" stroke="{color}" stroke-width="1.5" fill="none"/>')

    def dot(self, x, y, color):
        self.parts.append(
            f'<circle cx="{_fmt(self.px(x))}" cy="{_fmt(self.py(y))}" r="3" fill="{color}"/>'
        )

    def text(self, x, y, s):
        safe = s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        self.parts.append(
            f'<text x="{_fmt(self.px(x))}" y="{_fmt(self.py(y))}" font-size="12" '
            f'font-family="sans-serif">{safe}</text>'
        )

    def document(self) -> str:
        body = "\n".join(self.parts)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(_WIDTH)}" height="{_fmt(self.height)}" '
            f'viewBox="0 0 {_fmt(_WIDTH)} {_fmt(self.height)}">\n{body}\n</svg>\n'
        )


def _geodesic_item(canvas: _Canvas, item: dict) -> None:
    start, end = item["from"], item["to"]
    g = Geodesic(start, end)
    if g.vertical:
        x = end if math.isinf(start) else start
        canvas.line(x, 0.0, x, canvas.y_max, _STROKE[0])
    else:
        c = 0.5 * (start + end)
        canvas.arc(c, 0.5 * abs(end - start), _STROKE[0])


def _function_points(item: dict, x_min: float, x_max: float, y_cap: float):
    r, s = float(item["r"]), float(item["s"])
    samples = int(item.get("samples", 256))
    if samples < 2:
        raise GeometryError(f"function item needs at least 2 samples, got {samples}")
    xs = np.linspace(x_min, x_max, samples)
    ys = np.abs(r * np.sinh(xs) + s * np.cosh(xs))
    ys = np.minimum(ys, y_cap)  # clamp at the window top
    return [(float(x), float(y)) for x, y in zip(xs, ys) if math.isfinite(y)]


def render_halfplane(spec: PlotSpec, disk: bool = False) -> str:
    """Render a spec over the half-plane, or through the disk projection."""
    if disk:
        return _render_disk(spec)
    x_min, x_max, y_max = spec.window
    canvas = _Canvas(x_min, x_max, y_max)
    canvas.line(x_min, 0.0, x_max, 0.0, _STROKE[2])  # boundary axis
    for item in spec.items:
        kind = item["type"]
        if kind == "geodesic":
            _geodesic_item(canvas, item)
        elif kind == "point":
            canvas.dot(float(item["x"]), float(item["y"]), _STROKE[1])
        elif kind == "label":
            canvas.text(float(item["x"]), float(item["y"]), str(item["text"]))
        elif kind == "function":
            canvas.polyline(_function_points(item, x_min, x_max, 1.05 * y_max), _STROKE[2])
        elif kind == "hline":
            canvas.line(x_min, float(item["y"]), x_max, float(item["y"]), _STROKE[3], dash=True)
        else:
            raise GeometryError(f"unknown plot item type {kind!r}")
    return canvas.document()


def _to_disk(x: float, y: float) -> tuple[float, float]:
    w = (complex(x, y) - 1j) / (complex(x, y) + 1j)
    return w.real, w.imag


def _boundary_to_disk(x: float) -> tuple[float, float]:
    if math.isinf(x):
        return 1.0, 0.0
    w = (complex(x, 0.0) - 1j) / (complex(x, 0.0) + 1j)
    return w.real, w.imag


def _render_disk(spec: PlotSpec) -> str:
    canvas = _Canvas(-1.1, 1.1, 2.2)  # disk sits in [-1.1, 1.1] x [0, 2.2]
    shift = 1.1  # draw y in [0, 2.2] by lifting disk coordinates
    steps = 128
    circle = [(math.cos(a), math.sin(a) + shift) for a in np.linspace(0.0, 2.0 * math.pi, 2 * steps)]
    canvas.polyline(circle, _STROKE[2])
    for item in spec.items:
        kind = item["type"]
        if kind == "geodesic":
            g = Geodesic(item["from"], item["to"])
            pts = [_boundary_to_disk(g.start)]
            for u in np.linspace(0.0, 1.0, steps)[1:-1]:
                dx, dy = _to_disk(*_sample_geodesic(g, float(u)))
                pts.append((dx, dy))
            pts.append(_boundary_to_disk(g.end))
            canvas.polyline([(x, y + shift) for x, y in pts], _STROKE[0])
        elif kind == "point":
            dx, dy = _to_disk(float(item["x"]), float(item["y"]))
            canvas.dot(dx, dy + shift, _STROKE[1])
        elif kind == "label":
            dx, dy = _to_disk(float(item["x"]), float(item["y"]))
            canvas.text(dx, dy + shift, str(item["text"]))
        else:
            raise GeometryError(f"plot item type {kind!r} is not drawable in the disk projection")
    return canvas.document()


def _sample_geodesic(g: Geodesic, u: float) -> tuple[float, float]:
    # interior point at parameter u in (0, 1), start side to end side
    if g.vertical:
        x = g.end if math.isinf(g.start) else g.start
        y = math.tan(0.5 * math.pi * (u if math.isinf(g.end) else 1.0 - u))
        return x, y
    c = 0.5 * (g.start + g.end)
    r = 0.5 * abs(g.end - g.start)
    phi = math.pi * (1.0 - u) if g.end > g.start else math.pi * u
    return c + r * math.cos(phi), r * math.sin(phi)


def render_crossing_graph(r: float, s: float, window: tuple[float, float, float], samples: int = 256) -> str:
    """Graph of y = |r sinh t + s cosh t| with the unit line and its crossings."""
    from .smoothing import unit_crossings

    t_min, t_max, y_max = window
    items: list[dict] = [
        {"type": "function", "r": r, "s": s, "samples": samples},
        {"type": "hline", "y": 1.0},
    ]
    for t in unit_crossings(r, s):
        if t_min <= t <= t_max:
            items.append({"type": "point", "x": t, "y": 1.0})
    return render_halfplane(PlotSpec((t_min, t_max, y_max), tuple(items)))
