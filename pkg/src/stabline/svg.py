"""SVG rendering of an instance and its transversals.

Coordinates are converted to floats here and nowhere else; the drawing is
for looking at, never for reading back.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .dual import Classification, DualPoint, line_to_dual, segment_strip
from .instance import InstanceDocument, SolveResult, VerticalLine
from .selectors import SelectorMethod

COLORS = {
    SelectorMethod.EXTREME_MIN: "#1f77b4",
    SelectorMethod.EXTREME_MAX: "#2ca02c",
    SelectorMethod.MIDPOINT: "#ff7f0e",
    SelectorMethod.DISCRETE_BARYCENTER: "#9467bd",
    SelectorMethod.CONTINUOUS_BARYCENTER: "#d62728",
}

PAD = Fraction(1, 10)


def fmt(v) -> str:
    return format(float(v), ".12g")


class _Canvas:
    """Collects elements in model coordinates and tracks their bounding box."""

    def __init__(self):
        self.items: List[str] = []
        self.xs: List[Fraction] = []
        self.ys: List[Fraction] = []

    def _see(self, x, y):
        self.xs.append(Fraction(x))
        self.ys.append(Fraction(y))

    # SVG's y axis points down, so every ordinate is negated on output
    def line(self, x1, y1, x2, y2, cls: str, color: str = "#000", extra: str = ""):
        self._see(x1, y1)
        self._see(x2, y2)
        self.items.append(
            f'<line class="{cls}" x1="{fmt(x1)}" y1="{fmt(-y1)}" x2="{fmt(x2)}" y2="{fmt(-y2)}" '
            f'stroke="{color}" vector-effect="non-scaling-stroke"{extra}/>')

    def point(self, x, y, cls: str, color: str = "#000", extra: str = ""):
        self._see(x, y)
        self.items.append(
            f'<circle class="{cls}" cx="{fmt(x)}" cy="{fmt(-y)}" r="{{radius}}" fill="{color}"{extra}/>')

    def polygon(self, pts: Sequence[DualPoint], cls: str):
        for p in pts:
            self._see(p.m, p.b)
        coords = " ".join(f"{fmt(p.m)},{fmt(-p.b)}" for p in pts)
        self.items.append(
            f'<polygon class="{cls}" points="{coords}" fill="#e0f2ff" stroke="#000" '
            f'vector-effect="non-scaling-stroke"/>')

    def render(self, title: Optional[str]) -> bytes:
        if self.xs:
            x0, x1, y0, y1 = min(self.xs), max(self.xs), min(self.ys), max(self.ys)
        else:
            x0 = x1 = y0 = y1 = Fraction(0)
        w = (x1 - x0) or Fraction(1)
        h = (y1 - y0) or Fraction(1)
        x0, x1 = x0 - PAD * w, x1 + PAD * w
        y0, y1 = y0 - PAD * h, y1 + PAD * h
        radius = fmt(max(x1 - x0, y1 - y0) / 150)
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
                f'viewBox="{fmt(x0)} {fmt(-y1)} {fmt(x1 - x0)} {fmt(y1 - y0)}" '
                f'preserveAspectRatio="none" width="600" height="600">')
        body = [head]
        if title:
            body.append(f"<title>{escape(title)}</title>")
        body.extend(item.replace("{radius}", radius) for item in self.items)
        body.append("</svg>")
        return ("\n".join(body) + "\n").encode("utf-8")


def _widen(lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    if lo == hi:
        return lo - 1, hi + 1
    return lo, hi


def _chosen(result: SolveResult, methods: Optional[Iterable[SelectorMethod]]):
    wanted = list(SelectorMethod) if methods is None else [SelectorMethod(m) for m in methods]
    return [(m, result.lines[m]) for m in wanted if m in result.lines]


def _primal(doc: InstanceDocument, result: SolveResult, methods) -> _Canvas:
    canvas = _Canvas()
    ends = [seg.endpoints() for seg in doc.segments]
    xs = [p.x for pq in ends for p in pq]
    ys = [p.y for pq in ends for p in pq]
    for p, q in ends:
        canvas.line(p.x, p.y, q.x, q.y, "segment", "#1f3a93", ' stroke-width="2"')
    if not xs:
        return canvas
    xa, xb = _widen(min(xs), max(xs))
    ya, yb = _widen(min(ys), max(ys))
    for method, line in _chosen(result, methods):
        tag = f' data-method="{method.value}"'
        if isinstance(line, VerticalLine):
            canvas.line(line.x, ya, line.x, yb, "transversal", COLORS[method], tag)
        else:
            canvas.line(xa, line(xa), xb, line(xb), "transversal", COLORS[method], tag)
    return canvas


def _dual(result: SolveResult, methods) -> _Canvas:
    canvas = _Canvas()
    strips = [segment_strip(s) for s in result.family] if result.family is not None else []
    poly = result.polygon
    chosen = [(m, line_to_dual(result.canonical_lines[m]))
              for m, _ in _chosen(result, methods) if m in result.canonical_lines]

    ms = [v.m for v in poly] + [p.m for _, p in chosen]
    if not ms:
        # nothing feasible to frame: span the pairwise crossings of the boundaries
        bounds = [ln for st in strips for ln in set(st.boundaries())]
        ms = [(l2.b - l1.b) / (l1.m - l2.m) for l1, l2 in combinations(bounds, 2) if l1.m != l2.m]
    ma, mb = _widen(min(ms, default=Fraction(0)), max(ms, default=Fraction(0)))

    for st in strips:
        for ln in sorted(set(st.boundaries()), key=lambda l: l.b):
            canvas.line(ma, ln(ma), mb, ln(mb), "strip-boundary", "#999999")

    kind = poly.classification
    if kind is Classification.FULL_DIMENSIONAL:
        canvas.polygon(poly.vertices, "stab-polygon")
    elif kind is Classification.SEGMENT_SHAPED:
        a, b = poly.vertices
        canvas.line(a.m, a.b, b.m, b.b, "stab-polygon", "#000", ' stroke-width="3"')
    elif kind is Classification.SINGLE_POINT:
        v = poly.vertices[0]
        canvas.point(v.m, v.b, "stab-point")
        chosen = []  # every selector coincides with the single point

    for method, p in chosen:
        canvas.point(p.m, p.b, "selector", COLORS[method], f' data-method="{method.value}"')
    return canvas


def emit_svg(doc: InstanceDocument, result: SolveResult, mode: str = "primal",
             methods: Optional[Iterable[SelectorMethod]] = None) -> bytes:
    if mode == "primal":
        canvas = _primal(doc, result, methods)
    elif mode == "dual":
        canvas = _dual(result, methods)
    else:
        raise ValueError(f"unknown plot mode {mode!r}")
    return canvas.render(doc.name)
