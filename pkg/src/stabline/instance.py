"""Instance documents: parsing, canonical frame, solving, serialization.

Segments may be parallel to any rational direction (dx, dy).  The linear
map M = [[dy, -dx], [dx, dy]] sends that direction to (0, dx^2 + dy^2); it
is a rotation composed with a positive scaling, so incidence, betweenness
and the sign of phi all survive and the whole problem stays rational.
"""
from __future__ import annotations

import decimal
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .core import (
    InsufficientSegmentsError,
    Line,
    Point,
    SegmentFamily,
    StablineError,
    VerticalSegment,
)
from .dual import StabPolygon, polygon_area, stabbing_polygon
from .selectors import SelectorMethod, select_all
from .stabbing import feasibility

Matrix = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


class InputError(StablineError, ValueError):
    """Malformed or inconsistent instance document."""


class CoincidentAbscissaError(StablineError):
    """Two segments on one vertical line do not overlap.

    Only a vertical line could stab both, and vertical lines are outside
    the model, so the instance is reported infeasible.
    """


@dataclass(frozen=True)
class VerticalLine:
    """x = x0; only appears when a canonical transversal is mapped back."""

    x: Fraction


AnyLine = Union[Line, VerticalLine]


@dataclass(frozen=True)
class AbscissaSegment:
    x: Fraction
    lo: Fraction
    hi: Fraction

    def endpoints(self) -> Tuple[Point, Point]:
        return Point(self.x, self.lo), Point(self.x, self.hi)


@dataclass(frozen=True)
class EndpointSegment:
    p: Point
    q: Point

    def endpoints(self) -> Tuple[Point, Point]:
        return self.p, self.q


RawSegment = Union[AbscissaSegment, EndpointSegment]


@dataclass(frozen=True)
class InstanceDocument:
    segments: Tuple[RawSegment, ...]
    direction: Optional[Tuple[Fraction, Fraction]] = None
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        dx, dy = self.effective_direction
        if dx == 0 and dy == 0:
            raise InputError("direction must not be (0, 0)")
        for k, seg in enumerate(self.segments):
            p, q = seg.endpoints()
            if isinstance(seg, AbscissaSegment) and dx != 0:
                raise InputError(
                    f"segments[{k}]: x/lo/hi form requires a vertical direction")
            # parallel iff the cross product with the direction vanishes
            if (q.x - p.x) * dy - (q.y - p.y) * dx != 0:
                raise InputError(f"segments[{k}] is not parallel to direction ({dx}, {dy})")

    @property
    def effective_direction(self) -> Tuple[Fraction, Fraction]:
        return self.direction if self.direction is not None else (Fraction(0), Fraction(1))


def _mat_inv(a: Matrix) -> Matrix:
    (p, q), (r, s) = a
    det = p * s - q * r
    return ((s / det, -q / det), (-r / det, p / det))


def _mat_apply(a: Matrix, pt: Point) -> Point:
    (p, q), (r, s) = a
    return Point(p * pt.x + q * pt.y, r * pt.x + s * pt.y)


def transform_line(line: AnyLine, a: Matrix) -> AnyLine:
    """Image of ``line`` under the invertible linear map ``a``."""
    # alpha*x + beta*y = gamma
    if isinstance(line, VerticalLine):
        alpha, beta, gamma = Fraction(1), Fraction(0), line.x
    else:
        alpha, beta, gamma = -line.m, Fraction(1), line.b
    (p, q), (r, s) = _mat_inv(a)
    alpha, beta = alpha * p + beta * r, alpha * q + beta * s
    if beta == 0:
        return VerticalLine(gamma / alpha)
    return Line(-alpha / beta, gamma / beta)


@dataclass(frozen=True)
class CanonicalMap:
    matrix: Matrix
    inverse: Matrix

    @classmethod
    def for_direction(cls, dx: Fraction, dy: Fraction) -> "CanonicalMap":
        m = ((Fraction(dy), Fraction(-dx)), (Fraction(dx), Fraction(dy)))
        return cls(m, _mat_inv(m))

    def to_canonical(self, pt: Point) -> Point:
        return _mat_apply(self.matrix, pt)

    def to_original(self, pt: Point) -> Point:
        return _mat_apply(self.inverse, pt)

    def line_to_canonical(self, line: AnyLine) -> AnyLine:
        return transform_line(line, self.matrix)

    def line_to_original(self, line: AnyLine) -> AnyLine:
        return transform_line(line, self.inverse)


@dataclass
class SolveResult:
    feasible: bool
    unique: bool
    lines: Dict[SelectorMethod, AnyLine]
    polygon: StabPolygon
    area: Fraction
    family: Optional[SegmentFamily] = None
    cmap: Optional[CanonicalMap] = None
    note: Optional[str] = None
    witness: Optional[AnyLine] = None
    canonical_lines: Dict[SelectorMethod, Line] = field(default_factory=dict)


# ---------------------------------------------------------------- parsing

_FRACTION_RE = re.compile(r"\s*[+-]?\d+\s*/\s*\d+\s*")
_DECIMAL_RE = re.compile(r"\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*")


def parse_rational(value, where: str = "value") -> Fraction:
    """Integer, "p/q" string, finite decimal string, or JSON number, converted exactly."""
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, decimal.Decimal):
        if not value.is_finite():
            raise InputError(f"{where}: non-finite number")
        return Fraction(value)
    if isinstance(value, str):
        if _FRACTION_RE.fullmatch(value):
            num, den = value.split("/")
            if int(den) == 0:
                raise InputError(f"{where}: zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        if _DECIMAL_RE.fullmatch(value):
            return Fraction(decimal.Decimal(value.strip()))
    raise InputError(f"{where}: expected an integer, 'p/q' or decimal string, got {value!r}")


def _parse_point(value, where: str) -> Point:
    if not isinstance(value, list) or len(value) != 2:
        raise InputError(f"{where}: expected a [x, y] pair")
    return Point(parse_rational(value[0], f"{where}[0]"), parse_rational(value[1], f"{where}[1]"))


def _reject_constant(name):
    raise InputError(f"non-finite JSON constant {name}")


def parse_instance(text: Union[str, bytes]) -> InstanceDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"input is not UTF-8: {exc}") from None
    try:
        data = json.loads(text, parse_float=decimal.Decimal, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError("top level must be a JSON object")
    unknown = set(data) - {"direction", "segments", "name"}
    if unknown:
        raise InputError(f"unknown keys: {', '.join(sorted(unknown))}")

    direction = None
    if data.get("direction") is not None:
        d = _parse_point(data["direction"], "direction")
        direction = (d.x, d.y)
        if d.x == 0 and d.y == 0:
            raise InputError("direction: must not be (0, 0)")

    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("name: expected a string")

    raw = data.get("segments")
    if not isinstance(raw, list):
        raise InputError("segments: expected a list")
    segments: List[RawSegment] = []
    for k, item in enumerate(raw):
        where = f"segments[{k}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: expected an object")
        keys = set(item)
        if keys == {"x", "lo", "hi"}:
            x, lo, hi = (parse_rational(item[f], f"{where}.{f}") for f in ("x", "lo", "hi"))
            if lo > hi:
                raise InputError(f"{where}: lo {lo} exceeds hi {hi}")
            segments.append(AbscissaSegment(x, lo, hi))
        elif keys == {"p", "q"}:
            p = _parse_point(item["p"], f"{where}.p")
            q = _parse_point(item["q"], f"{where}.q")
            segments.append(EndpointSegment(p, q))
        else:
            raise InputError(f"{where}: expected keys x/lo/hi or p/q, got {sorted(keys)}")
    return InstanceDocument(tuple(segments), direction, name)


def _fmt(v: Fraction) -> str:
    return str(v)


def document_to_dict(doc: InstanceDocument) -> dict:
    out: dict = {}
    if doc.name is not None:
        out["name"] = doc.name
    if doc.direction is not None:
        out["direction"] = [_fmt(doc.direction[0]), _fmt(doc.direction[1])]
    segs = []
    for s in doc.segments:
        if isinstance(s, AbscissaSegment):
            segs.append({"x": _fmt(s.x), "lo": _fmt(s.lo), "hi": _fmt(s.hi)})
        else:
            segs.append({"p": [_fmt(s.p.x), _fmt(s.p.y)], "q": [_fmt(s.q.x), _fmt(s.q.y)]})
    out["segments"] = segs
    return out


def serialize_instance(doc: InstanceDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"


# ---------------------------------------------------------------- solving

def canonicalize(doc: InstanceDocument) -> Tuple[SegmentFamily, CanonicalMap]:
    """Rotate-and-scale to vertical segments, sort by abscissa, merge coincident abscissae."""
    if not doc.segments:
        raise InputError("the instance has no segments")
    cmap = CanonicalMap.for_direction(*doc.effective_direction)
    by_x: Dict[Fraction, Tuple[Fraction, Fraction]] = {}
    for seg in doc.segments:
        p, q = (cmap.to_canonical(e) for e in seg.endpoints())
        assert p.x == q.x
        lo, hi = min(p.y, q.y), max(p.y, q.y)
        if p.x in by_x:
            old_lo, old_hi = by_x[p.x]
            lo, hi = max(lo, old_lo), min(hi, old_hi)
            if lo > hi:
                raise CoincidentAbscissaError(
                    f"segments sharing the canonical abscissa {p.x} do not overlap; "
                    "only a vertical line could stab them")
        by_x[p.x] = (lo, hi)
    family = SegmentFamily(VerticalSegment(x, lo, hi) for x, (lo, hi) in sorted(by_x.items()))
    return family, cmap


def solve_instance(doc: InstanceDocument) -> SolveResult:
    try:
        family, cmap = canonicalize(doc)
    except CoincidentAbscissaError as exc:
        return SolveResult(False, False, {}, StabPolygon(()), Fraction(0), note=str(exc))
    if family.n < 2:
        raise InsufficientSegmentsError(
            "solving needs segments on at least two distinct lines; "
            "a single segment has an unbounded set of transversals")
    report = feasibility(family)
    polygon = stabbing_polygon(family)
    if not report.feasible:
        return SolveResult(False, False, {}, polygon, Fraction(0), family, cmap)
    canonical = select_all(family)
    lines = {k: cmap.line_to_original(v) for k, v in canonical.items()}
    return SolveResult(
        True, report.unique, lines, polygon, polygon_area(polygon), family, cmap,
        witness=cmap.line_to_original(report.witness), canonical_lines=canonical)

