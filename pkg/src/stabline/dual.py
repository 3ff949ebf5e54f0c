"""The dual plane of slopes and intercepts.

A non-vertical line y = m*x + b is the point (m, b) here.  The lines
through a primal point (x0, y0) form the dual line b = -x0*m + y0, and the
lines crossing a vertical segment {x0} x [lo, hi] form the strip between
b = lo - x0*m and b = hi - x0*m.  The transversals of a family are the
intersection of its strips: a bounded convex polygon, possibly degenerate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .core import (
    InsufficientSegmentsError,
    Line,
    Point,
    SegmentFamily,
    VerticalLineError,
    VerticalSegment,
    as_rational,
    line_through,
)
from .stabbing import extreme_max_ba, extreme_min_ab, feasibility, stabs_all


@dataclass(frozen=True, order=True)
class DualPoint:
    m: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", as_rational(self.m))
        object.__setattr__(self, "b", as_rational(self.b))

    def to_line(self) -> Line:
        return Line(self.m, self.b)


@dataclass(frozen=True)
class DualStrip:
    """{(m, b) : lower <= b - slope*m <= upper}, where slope = -x of the segment."""

    slope: Fraction
    lower: Fraction
    upper: Fraction

    def value(self, p: DualPoint) -> Fraction:
        return p.b - self.slope * p.m

    def contains(self, p: DualPoint) -> bool:
        return self.lower <= self.value(p) <= self.upper

    def boundaries(self) -> Tuple[Line, Line]:
        return Line(self.slope, self.lower), Line(self.slope, self.upper)


class Classification(enum.Enum):
    EMPTY = "Empty"
    SINGLE_POINT = "SinglePoint"
    SEGMENT_SHAPED = "SegmentShaped"
    FULL_DIMENSIONAL = "FullDimensional"


_BY_COUNT = {
    0: Classification.EMPTY,
    1: Classification.SINGLE_POINT,
    2: Classification.SEGMENT_SHAPED,
}


@dataclass(frozen=True)
class StabPolygon:
    """Convex polygon of dual points, CCW from the lexicographically smallest vertex."""

    vertices: Tuple[DualPoint, ...]

    @property
    def classification(self) -> Classification:
        return _BY_COUNT.get(len(self.vertices), Classification.FULL_DIMENSIONAL)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def line_to_dual(line: Line) -> DualPoint:
    return DualPoint(line.m, line.b)


def dual_to_line(p: DualPoint) -> Line:
    return Line(p.m, p.b)


def point_sheaf_dual(p: Point) -> Line:
    """Dual image of all lines through ``p``: the line b = -p.x*m + p.y."""
    return Line(-p.x, p.y)


def segment_strip(seg: VerticalSegment) -> DualStrip:
    return DualStrip(-seg.x, seg.lo, seg.hi)


def _cross(o: DualPoint, a: DualPoint, b: DualPoint) -> Fraction:
    return (a.m - o.m) * (b.b - o.b) - (a.b - o.b) * (b.m - o.m)


def convex_hull(points: Iterable[DualPoint]) -> Tuple[DualPoint, ...]:
    """Strict convex hull (collinear points dropped), CCW from the smallest point.

    Monotone chain; the sort puts the lexicographically smallest point first.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: List[DualPoint] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[DualPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    # when all points are collinear the chain collapses to the two extremes
    return tuple(lower[:-1] + upper[:-1])


def two_segment_parallelogram(s1: VerticalSegment, s2: VerticalSegment) -> StabPolygon:
    """Dual polygon of the lines crossing two segments at distinct abscissae.

    Its corners are the lines joining the endpoints pairwise.
    """
    if s1.x == s2.x:
        raise VerticalLineError(f"both segments sit at x={s1.x}")
    corners = [line_to_dual(line_through(p, q))
               for p in (s1.bottom, s1.top) for q in (s2.bottom, s2.top)]
    return StabPolygon(convex_hull(corners))


def stabbing_polygon(family: SegmentFamily) -> StabPolygon:
    """All transversals of ``family`` as a dual polygon.

    Candidates are the two extreme lines plus every bottom-bottom and
    top-top line that stabs the whole family; every vertex of the strip
    intersection is one of these.
    """
    if family.n < 2:
        raise InsufficientSegmentsError(f"need at least 2 segments, got {family.n}")
    if not feasibility(family).feasible:
        return StabPolygon(())
    candidates = {line_to_dual(extreme_min_ab(family).line),
                  line_to_dual(extreme_max_ba(family).line)}
    for si, sj in combinations(family.segments, 2):
        for line in (line_through(si.bottom, sj.bottom), line_through(si.top, sj.top)):
            if stabs_all(line, family):
                candidates.add(line_to_dual(line))
    return StabPolygon(convex_hull(candidates))


def oracle_feasible(family: SegmentFamily) -> Optional[DualPoint]:
    """Brute-force transversal search, independent of the extreme-line argument.

    Intersects every pair of strip boundary lines and returns the first
    intersection lying in all strips.  The strip intersection is bounded
    once two abscissae differ, so if it is non-empty one of its corners is
    such an intersection.
    """
    if family.n < 2:
        raise InsufficientSegmentsError(f"need at least 2 segments, got {family.n}")
    strips = [segment_strip(s) for s in family]
    bounds = [(st.slope, c) for st in strips for c in (st.lower, st.upper)]
    for (k1, c1), (k2, c2) in combinations(bounds, 2):
        if k1 == k2:
            continue
        # b = k1*m + c1 = k2*m + c2
        m = (c2 - c1) / (k1 - k2)
        p = DualPoint(m, k1 * m + c1)
        if all(st.contains(p) for st in strips):
            return p
    return None


def signed_area2(vertices: Sequence[DualPoint]) -> Fraction:
    """Twice the signed shoelace area."""
    n = len(vertices)
    total = Fraction(0)
    for k in range(n):
        p, q = vertices[k], vertices[(k + 1) % n]
        total += p.m * q.b - q.m * p.b
    return total


def polygon_area(poly: StabPolygon) -> Fraction:
    if poly.classification is not Classification.FULL_DIMENSIONAL:
        return Fraction(0)
    return abs(signed_area2(poly.vertices)) / 2


def polygon_centroid(poly: StabPolygon) -> Optional[DualPoint]:
    """Area centroid; for a point or a segment, the centroid of that lower-dimensional set."""
    vs = poly.vertices
    if not vs:
        return None
    if len(vs) == 1:
        return vs[0]
    if len(vs) == 2:
        return DualPoint((vs[0].m + vs[1].m) / 2, (vs[0].b + vs[1].b) / 2)
    a2 = signed_area2(vs)
    cm = cb = Fraction(0)
    n = len(vs)
    for k in range(n):
        p, q = vs[k], vs[(k + 1) % n]
        w = p.m * q.b - q.m * p.b
        cm += (p.m + q.m) * w
        cb += (p.b + q.b) * w
    # centroid = sum / (6A) with A = a2/2
    return DualPoint(cm / (3 * a2), cb / (3 * a2))


def vertex_mean(poly: StabPolygon) -> Optional[DualPoint]:
    vs = poly.vertices
    if not vs:
        return None
    n = len(vs)
    return DualPoint(sum((v.m for v in vs), Fraction(0)) / n,
                     sum((v.b for v in vs), Fraction(0)) / n)


def polygon_contains(poly: StabPolygon, p: DualPoint) -> bool:
    """Closed membership test for a (possibly degenerate) convex polygon."""
    vs = poly.vertices
    if not vs:
        return False
    if len(vs) == 1:
        return p == vs[0]
    if len(vs) == 2:
        a, b = vs
        return (_cross(a, b, p) == 0
                and min(a.m, b.m) <= p.m <= max(a.m, b.m)
                and min(a.b, b.b) <= p.b <= max(a.b, b.b))
    n = len(vs)
    return all(_cross(vs[k], vs[(k + 1) % n], p) >= 0 for k in range(n))
