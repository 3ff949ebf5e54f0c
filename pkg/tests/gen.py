"""Random instance generators and the worked instances shared by the tests."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from stabline import Line, Point, SegmentFamily, VerticalSegment, line_through

PENTAGON = SegmentFamily.from_tuples(
    [(1, 1, 7), (3, 4, 10), (4, 3, 8), (7, 6, 9), (9, 3, 10), (10, 2, 12)])
QUADRILATERAL = SegmentFamily.from_tuples(
    [(1, 1, 7), (3, 4, 10), (4, 6, 8), (7, 4, 9), (9, 3, 10), (10, 2, 12)])
OCTAGON = SegmentFamily.from_tuples(
    [(1, 1, 11), (2, 2, 12), (4, 3, 12), (6, 2, 11), (8, 2, 12), (9, 3, 13)])
INFEASIBLE3 = SegmentFamily.from_tuples([(0, 0, 1), (1, 3, 4), (2, 0, 1)])
UNIQUE3 = SegmentFamily.from_tuples([(0, 0, 1), (1, 1, 2), (2, 0, 1)])
POINT_PAIR = SegmentFamily.from_tuples([(0, 0, 0), (1, 1, 1)])

F = Fraction


def rand_rational(rng: random.Random, lo=-20, hi=20, maxden=4) -> Fraction:
    den = rng.randint(1, maxden)
    return F(rng.randint(lo * den, hi * den), den)


def _floor_q(v: Fraction, den=4) -> Fraction:
    return F(math.floor(v * den), den)


def _ceil_q(v: Fraction, den=4) -> Fraction:
    return F(math.ceil(v * den), den)


def distinct_abscissae(rng: random.Random, n: int) -> list:
    xs = set()
    while len(xs) < n:
        xs.add(rand_rational(rng))
    return sorted(xs)


def uniform_family(rng: random.Random, n=None, point_prob=0.1) -> SegmentFamily:
    """Bounds drawn independently in [-20, 20] with denominators <= 4."""
    n = n or rng.randint(2, 8)
    segs = []
    for x in distinct_abscissae(rng, n):
        a = rand_rational(rng)
        b = a if rng.random() < point_prob else rand_rational(rng)
        segs.append(VerticalSegment(x, min(a, b), max(a, b)))
    return SegmentFamily(segs)


def planted_family(rng: random.Random, n=None, point_prob=0.1) -> SegmentFamily:
    """Segments around a line pinned at quarter-grid heights over the outer abscissae.

    Always feasible and inside [-20, 20]; segments touching or collapsing
    onto the line are common.
    """
    n = n or rng.randint(2, 8)
    xs = distinct_abscissae(rng, n)
    line = line_through(Point(xs[0], rand_rational(rng)), Point(xs[-1], rand_rational(rng)))
    segs = []
    for x in xs:
        v = line(x)
        lo, hi = _floor_q(v), _ceil_q(v)
        if lo == hi and rng.random() < point_prob:
            segs.append(VerticalSegment(x, v, v))
            continue
        if rng.random() < 0.7:
            lo = max(lo - F(rng.randint(0, 40), 4), F(-20))
        if rng.random() < 0.7:
            hi = min(hi + F(rng.randint(0, 40), 4), F(20))
        segs.append(VerticalSegment(x, lo, hi))
    return SegmentFamily(segs)


def oracle_family(rng: random.Random) -> SegmentFamily:
    """The randomized mix used for the three-way feasibility comparison.

    Roughly one in five families is forced to contain a point segment.
    """
    force_point = rng.random() < 0.2
    fam = (uniform_family if rng.random() < 0.5 else planted_family)(rng)
    if force_point and not any(s.is_point for s in fam):
        k = rng.randrange(fam.n)
        segs = list(fam)
        s = segs[k]
        y = s.lo if rng.random() < 0.5 else s.hi
        segs[k] = VerticalSegment(s.x, y, y)
        fam = SegmentFamily(segs)
    return fam


def feasible_family(rng: random.Random, n=None) -> SegmentFamily:
    return planted_family(rng, n)


def unique_family(rng: random.Random, n=None) -> SegmentFamily:
    """A family with exactly one transversal.

    Either two point segments on a line, or a bottom/top/bottom (or
    top/bottom/top) endpoint pattern pinned to the line.
    """
    n = n or rng.randint(2, 8)
    if n < 3 or rng.random() < 0.4:
        kind = "points"
    else:
        kind = rng.choice(["aba", "bab"])
    xs = distinct_abscissae(rng, n)
    line = Line(rand_rational(rng, -3, 3), rand_rational(rng, -10, 10))
    if kind == "points":
        pinned = dict.fromkeys(rng.sample(range(n), 2), "p")
    else:
        i, j, k = sorted(rng.sample(range(n), 3))
        first, mid = ("lo", "hi") if kind == "aba" else ("hi", "lo")
        pinned = {i: first, j: mid, k: first}
    segs = []
    for idx, x in enumerate(xs):
        v = line(x)
        below = v - F(rng.randint(0, 20), rng.randint(1, 4))
        above = v + F(rng.randint(0, 20), rng.randint(1, 4))
        how = pinned.get(idx)
        if how == "p":
            segs.append(VerticalSegment(x, v, v))
        elif how == "lo":
            segs.append(VerticalSegment(x, v, above))
        elif how == "hi":
            segs.append(VerticalSegment(x, below, v))
        else:
            segs.append(VerticalSegment(x, below, above))
    return SegmentFamily(segs)


def pythagorean_rotation(rng: random.Random):
    """(c, s) with c^2 + s^2 = 1, both rational."""
    while True:
        a, b = rng.randint(-12, 12), rng.randint(-12, 12)
        if a or b:
            break
    r = a * a + b * b
    return F(a * a - b * b, r), F(2 * a * b, r)


# hypothesis strategies

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
points = st.builds(Point, rationals, rationals)


@st.composite
def families(draw, min_n=1, max_n=8, feasible=None):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return uniform_family(rng, 1)
    if feasible:
        return planted_family(rng, n)
    return (uniform_family if rng.random() < 0.5 else planted_family)(rng, n)
