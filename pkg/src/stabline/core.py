"""Exact scalars, primal geometric types and the orientation functional.

Every scalar is a :class:`fractions.Fraction`; nothing in the package
touches floating point except SVG rendering.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


class StablineError(Exception):
    """Base class for all errors raised by the package."""


class RationalError(StablineError, ValueError):
    pass


class VerticalLineError(StablineError, ValueError):
    """Two points share an abscissa, so no line y = m*x + b joins them."""


class InsufficientSegmentsError(StablineError, ValueError):
    pass


class FamilyError(StablineError, ValueError):
    """A segment family violates its ordering or interval invariants."""


def rat(p: int, q: int = 1) -> Fraction:
    """Reduced fraction p/q with a positive denominator."""
    if q == 0:
        raise RationalError(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def as_rational(value: RationalLike) -> Fraction:
    if type(value) is Fraction:
        return value
    if isinstance(value, bool) or not isinstance(value, _RationalABC):
        raise RationalError(f"not an exact rational: {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)


@dataclass(frozen=True)
class Line:
    """The non-vertical line y = m*x + b."""

    m: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", as_rational(self.m))
        object.__setattr__(self, "b", as_rational(self.b))

    def __call__(self, x: RationalLike) -> Fraction:
        return eval_line(self, x)


class Orientation(enum.Enum):
    COUNTERCLOCKWISE = 1
    CLOCKWISE = -1
    COLLINEAR = 0


@dataclass(frozen=True)
class VerticalSegment:
    """Closed segment {x} x [lo, hi]; lo == hi is a point segment."""

    x: Fraction
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        for name in ("x", "lo", "hi"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.lo > self.hi:
            raise FamilyError(f"segment at x={self.x} has lo {self.lo} > hi {self.hi}")

    @cached_property
    def bottom(self) -> Point:
        return Point(self.x, self.lo)

    @cached_property
    def top(self) -> Point:
        return Point(self.x, self.hi)

    @property
    def midpoint(self) -> Point:
        return Point(self.x, (self.lo + self.hi) / 2)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


class SegmentFamily(Sequence[VerticalSegment]):
    """Non-empty vertical segments with strictly increasing abscissae.

    Indexing is 0-based like any Python sequence; the 1-based labels used
    for extreme lines live in :mod:`stabline.stabbing`.
    """

    __slots__ = ("_segments",)

    def __init__(self, segments: Iterable[VerticalSegment]):
        segs = tuple(segments)
        if not segs:
            raise FamilyError("a segment family needs at least one segment")
        for prev, cur in zip(segs, segs[1:]):
            if not prev.x < cur.x:
                raise FamilyError(
                    f"abscissae must be strictly increasing, got {prev.x} then {cur.x}")
        self._segments = segs

    @classmethod
    def from_tuples(cls, triples: Iterable[tuple]) -> "SegmentFamily":
        """Build from ``(x, lo, hi)`` triples; ints, Fractions and "p/q" strings all work."""
        return cls(VerticalSegment(*(Fraction(v) for v in t)) for t in triples)

    @property
    def n(self) -> int:
        return len(self._segments)

    @property
    def segments(self) -> tuple:
        return self._segments

    def __len__(self) -> int:
        return len(self._segments)

    def __getitem__(self, i):
        return self._segments[i]

    def __iter__(self):
        return iter(self._segments)

    def __eq__(self, other):
        if not isinstance(other, SegmentFamily):
            return NotImplemented
        return self._segments == other._segments

    def __hash__(self):
        return hash(self._segments)

    def __repr__(self):
        body = ", ".join(f"{{{s.x},[{s.lo},{s.hi}]}}" for s in self._segments)
        return f"SegmentFamily({body})"


def phi(a: Point, b: Point, c: Point) -> Fraction:
    """det [[1,1,1],[xa,xb,xc],[ya,yb,yc]] via its 2x2 cofactor form."""
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    d = phi(a, b, c)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def line_through(p: Point, q: Point) -> Line:
    if p.x == q.x:
        raise VerticalLineError(f"points {p} and {q} share the abscissa {p.x}")
    m = (q.y - p.y) / (q.x - p.x)
    return Line(m, p.y - m * p.x)


def eval_line(line: Line, x: RationalLike) -> Fraction:
    return line.m * x + line.b
