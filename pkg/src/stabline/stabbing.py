"""Feasibility of the stabbing problem via the two extreme endpoint lines.

For a family L_1..L_n with bottoms A_i and tops B_i, the line A_sB_t of
minimum slope among all A_iB_j (i < j) stabs every segment iff any line
does; symmetrically for the maximum-slope B_uA_v.  When a transversal
exists these two are the steepest and the flattest transversals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .core import (
    InsufficientSegmentsError,
    Line,
    SegmentFamily,
    StablineError,
    VerticalSegment,
    eval_line,
    line_through,
    phi,
)


class NoTransversalError(StablineError):
    """The family admits no common non-vertical transversal."""


@dataclass(frozen=True)
class ExtremeLine:
    line: Line
    i: int  # 1-based
    j: int


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    witness: Optional[Line] = None
    unique: bool = False


def stabs(line: Line, seg: VerticalSegment) -> bool:
    return seg.lo <= eval_line(line, seg.x) <= seg.hi


def stabs_all(line: Line, family: SegmentFamily) -> bool:
    return all(stabs(line, s) for s in family)


def _require(family: SegmentFamily, n: int) -> None:
    if family.n < n:
        raise InsufficientSegmentsError(f"need at least {n} segments, got {family.n}")


def _slope(p, q) -> Fraction:
    return (q.y - p.y) / (q.x - p.x)


def extreme_min_ab(family: SegmentFamily) -> ExtremeLine:
    """A_sB_t: the minimum-slope line from a bottom endpoint to a later top endpoint.

    Ties go to the lexicographically smallest (s, t).
    """
    _require(family, 2)
    best = None
    segs = family.segments
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            m = _slope(segs[i].bottom, segs[j].top)
            if best is None or m < best[0]:
                best = (m, i, j)
    _, s, t = best
    return ExtremeLine(line_through(segs[s].bottom, segs[t].top), s + 1, t + 1)


def extreme_max_ba(family: SegmentFamily) -> ExtremeLine:
    """B_uA_v: the maximum-slope line from a top endpoint to a later bottom endpoint."""
    _require(family, 2)
    best = None
    segs = family.segments
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            m = _slope(segs[i].top, segs[j].bottom)
            if best is None or m > best[0]:
                best = (m, i, j)
    _, u, v = best
    return ExtremeLine(line_through(segs[u].top, segs[v].bottom), u + 1, v + 1)


def feasibility(family: SegmentFamily) -> FeasibilityReport:
    if family.n == 1:
        mid = family[0].midpoint
        return FeasibilityReport(True, Line(0, mid.y), False)
    r = extreme_min_ab(family).line
    if not stabs_all(r, family):
        return FeasibilityReport(False)
    p = extreme_max_ba(family).line
    return FeasibilityReport(True, r, r == p)


def condition_ii(family: SegmentFamily) -> bool:
    """Direct O(n^3) check of phi(A_i,B_j,A_k) <= 0 <= phi(B_i,A_j,B_k) over i < j < k.

    Too slow for production use; kept as a cross-check on :func:`feasibility`.
    """
    _require(family, 3)
    segs = family.segments
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if phi(segs[i].bottom, segs[j].top, segs[k].bottom) > 0:
                    return False
                if phi(segs[i].top, segs[j].bottom, segs[k].top) < 0:
                    return False
    return True


def slope_bounds(family: SegmentFamily) -> Tuple[Fraction, Fraction]:
    """(min, max) slope over all transversals, i.e. (slope of B_uA_v, slope of A_sB_t)."""
    _require(family, 2)
    if not feasibility(family).feasible:
        raise NoTransversalError("no line stabs every segment of the family")
    return extreme_max_ba(family).line.m, extreme_min_ab(family).line.m
