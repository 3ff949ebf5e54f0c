"""Strategies for picking one transversal out of the stabbing polygon."""
from __future__ import annotations

import enum
from typing import Dict

from .core import Line, SegmentFamily
from .dual import (
    DualPoint,
    line_to_dual,
    polygon_centroid,
    stabbing_polygon,
    vertex_mean,
)
from .stabbing import NoTransversalError, extreme_max_ba, extreme_min_ab, feasibility


class SelectorMethod(enum.Enum):
    EXTREME_MIN = "extreme-min"
    EXTREME_MAX = "extreme-max"
    MIDPOINT = "midpoint"
    DISCRETE_BARYCENTER = "discrete"
    CONTINUOUS_BARYCENTER = "centroid"


def _check(family: SegmentFamily) -> None:
    if not feasibility(family).feasible:
        raise NoTransversalError("no line stabs every segment of the family")


def select_extreme_min(family: SegmentFamily) -> Line:
    """A_sB_t, the steepest transversal."""
    _check(family)
    return extreme_min_ab(family).line


def select_extreme_max(family: SegmentFamily) -> Line:
    """B_uA_v, the flattest transversal."""
    _check(family)
    return extreme_max_ba(family).line


def select_midpoint(family: SegmentFamily) -> Line:
    """Dual midpoint of the steepest and flattest transversals."""
    _check(family)
    r = line_to_dual(extreme_min_ab(family).line)
    p = line_to_dual(extreme_max_ba(family).line)
    return Line((r.m + p.m) / 2, (r.b + p.b) / 2)


def select_discrete_barycenter(family: SegmentFamily) -> Line:
    """Mean of the stabbing polygon's vertices."""
    _check(family)
    return vertex_mean(stabbing_polygon(family)).to_line()


def select_continuous_barycenter(family: SegmentFamily) -> Line:
    """Area centroid of the stabbing polygon.

    A polygon that collapsed to a point or a segment yields that point or
    the segment's midpoint.
    """
    _check(family)
    c: DualPoint = polygon_centroid(stabbing_polygon(family))
    return c.to_line()


_DISPATCH = {
    SelectorMethod.EXTREME_MIN: select_extreme_min,
    SelectorMethod.EXTREME_MAX: select_extreme_max,
    SelectorMethod.MIDPOINT: select_midpoint,
    SelectorMethod.DISCRETE_BARYCENTER: select_discrete_barycenter,
    SelectorMethod.CONTINUOUS_BARYCENTER: select_continuous_barycenter,
}


def select(family: SegmentFamily, method: SelectorMethod) -> Line:
    return _DISPATCH[SelectorMethod(method)](family)


def select_all(family: SegmentFamily) -> Dict[SelectorMethod, Line]:
    """Every method at once, sharing one polygon construction."""
    _check(family)
    r = extreme_min_ab(family).line
    p = extreme_max_ba(family).line
    poly = stabbing_polygon(family)
    return {
        SelectorMethod.EXTREME_MIN: r,
        SelectorMethod.EXTREME_MAX: p,
        SelectorMethod.MIDPOINT: Line((r.m + p.m) / 2, (r.b + p.b) / 2),
        SelectorMethod.DISCRETE_BARYCENTER: vertex_mean(poly).to_line(),
        SelectorMethod.CONTINUOUS_BARYCENTER: polygon_centroid(poly).to_line(),
    }
