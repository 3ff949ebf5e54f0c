import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings

from stabline import (
    Line,
    NoTransversalError,
    SelectorMethod,
    extreme_max_ba,
    extreme_min_ab,
    feasibility,
    line_to_dual,
    select,
    select_all,
    select_continuous_barycenter,
    select_discrete_barycenter,
    select_midpoint,
    stabbing_polygon,
    stabs_all,
)
from stabline.dual import polygon_contains

import gen
from gen import PENTAGON, QUADRILATERAL, OCTAGON, INFEASIBLE3, POINT_PAIR, families

KNOWN = {
    "pentagon": (PENTAGON, Line(F(5, 12), F(49, 12)), Line(F(13, 30), F(137, 30)),
             Line(F(5, 12), F(107, 24))),
    "quadrilateral": (QUADRILATERAL, Line(F(7, 30), F(76, 15)), Line(F(13, 40), F(223, 40)),
             Line(F(593, 2130), F(11873, 2130))),
    "octagon": (OCTAGON, Line(F(1, 4), F(23, 4)), Line(F(7, 16), F(77, 16)),
              Line(F(11, 46), F(267, 46))),
}


@pytest.mark.parametrize("name", KNOWN)
def test_known_selections(name):
    fam, s1, s2, s3 = KNOWN[name]
    assert select_midpoint(fam) == s1
    assert select_discrete_barycenter(fam) == s2
    assert select_continuous_barycenter(fam) == s3


def test_dispatch():
    assert select(PENTAGON, SelectorMethod.EXTREME_MIN) == Line(1, 1)
    assert select(PENTAGON, SelectorMethod.EXTREME_MAX) == Line(F(-1, 6), F(43, 6))
    assert select(PENTAGON, SelectorMethod.CONTINUOUS_BARYCENTER) == Line(F(5, 12), F(107, 24))
    assert select(PENTAGON, "midpoint") == Line(F(5, 12), F(49, 12))


def test_point_pair_all_agree():
    assert {select(POINT_PAIR, m) for m in SelectorMethod} == {Line(1, 0)}


@pytest.mark.parametrize("method", list(SelectorMethod))
def test_infeasible_raises(method):
    with pytest.raises(NoTransversalError):
        select(INFEASIBLE3, method)


def test_select_all_matches_individual_calls():
    for fam in (PENTAGON, QUADRILATERAL, OCTAGON):
        assert select_all(fam) == {m: select(fam, m) for m in SelectorMethod}


def test_segment_shaped_polygon_uses_midpoint():
    fam = gen.SegmentFamily.from_tuples([(0, 0, 0), (1, 0, 1), (2, 0, 2)])
    poly = stabbing_polygon(fam)
    assert len(poly) == 2
    assert select_continuous_barycenter(fam) == Line(F(1, 2), 0)
    assert select_discrete_barycenter(fam) == Line(F(1, 2), 0)


@settings(max_examples=100)
@given(families(min_n=2, feasible=True))
def test_outputs_are_transversals_inside_slope_bounds(fam):
    lo, hi = extreme_max_ba(fam).line.m, extreme_min_ab(fam).line.m
    poly = stabbing_polygon(fam)
    for line in select_all(fam).values():
        assert stabs_all(line, fam)
        assert lo <= line.m <= hi
        assert polygon_contains(poly, line_to_dual(line))


@settings(max_examples=100)
@given(families(min_n=2, max_n=2))
def test_two_segments_pick_the_midpoint_line(fam):
    s1, s2 = fam
    m = (s2.midpoint.y - s1.midpoint.y) / (s2.x - s1.x)
    expected = Line(m, s1.midpoint.y - m * s1.x)
    lines = select_all(fam)
    for method in (SelectorMethod.MIDPOINT, SelectorMethod.DISCRETE_BARYCENTER,
                   SelectorMethod.CONTINUOUS_BARYCENTER):
        assert lines[method] == expected


def test_unique_families_collapse():
    rng = random.Random(5)
    for _ in range(200):
        fam = gen.unique_family(rng)
        assert feasibility(fam).unique
        assert len(set(select_all(fam).values())) == 1


def monte_carlo_centroid(poly, n, rng):
    """Rejection-sampled area centroid and its per-coordinate standard error."""
    vs = np.array([[float(v.m), float(v.b)] for v in poly.vertices])
    lo, hi = vs.min(axis=0), vs.max(axis=0)
    edges = np.roll(vs, -1, axis=0) - vs
    got = []
    total = 0
    while total < n:
        pts = rng.uniform(lo, hi, size=(4 * n, 2))
        rel = pts[:, None, :] - vs[None, :, :]
        cross = edges[None, :, 0] * rel[:, :, 1] - edges[None, :, 1] * rel[:, :, 0]
        inside = pts[(cross >= 0).all(axis=1)]
        got.append(inside)
        total += len(inside)
    sample = np.concatenate(got)[:n]
    return sample.mean(axis=0), sample.std(axis=0, ddof=1) / np.sqrt(n)


def test_centroid_against_monte_carlo_quadrilateral():
    rng = np.random.default_rng(12)
    mean, se = monte_carlo_centroid(stabbing_polygon(QUADRILATERAL), 20000, rng)
    exact = select_continuous_barycenter(QUADRILATERAL)
    assert abs(mean[0] - float(exact.m)) < 4 * se[0]
    assert abs(mean[1] - float(exact.b)) < 4 * se[1]
