"""Rectilinear domains and exact geometric predicates.

All coordinates are stored doubled: a vertex given as (x, y) is kept as
(2x, 2y). Pixel centroids and half-unit fattenings then stay integral, so
no predicate here ever touches floating point. Functions that take points
or rectangles expect them in the same doubled (internal) units; use
``to_internal`` / ``from_internal`` at the edges of the program.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidPolygon, MalformedInput, PointOutsideDomain

SCALE = 2


class VertexKind(str, Enum):
    CONVEX = "Convex"
    REFLEX = "Reflex"


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int


@dataclass(frozen=True)
class AxisRect:
    xmin: int
    ymin: int
    xmax: int
    ymax: int

    def __post_init__(self) -> None:
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise ValueError(f"degenerate rectangle {self}")

    @property
    def area(self) -> int:
        return (self.xmax - self.xmin) * (self.ymax - self.ymin)

    @property
    def centroid(self) -> Point:
        # exact whenever both sides have even length, which doubling guarantees
        # for every pixel of a domain
        return Point((self.xmin + self.xmax) // 2, (self.ymin + self.ymax) // 2)

    def interiors_meet(self, other: "AxisRect") -> bool:
        return (max(self.xmin, other.xmin) < min(self.xmax, other.xmax)
                and max(self.ymin, other.ymin) < min(self.ymax, other.ymax))

    def contains(self, other: "AxisRect") -> bool:
        return (self.xmin <= other.xmin and other.xmax <= self.xmax
                and self.ymin <= other.ymin and other.ymax <= self.ymax)

    def intersection(self, other: "AxisRect") -> "AxisRect":
        return AxisRect(max(self.xmin, other.xmin), max(self.ymin, other.ymin),
                        min(self.xmax, other.xmax), min(self.ymax, other.ymax))


@dataclass(frozen=True)
class RectilinearDomain:
    """A validated simple orthogonal polygon, counter-clockwise, doubled units."""

    vertices: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def area(self) -> int:
        vs = self.vertices
        twice = sum(vs[i].x * vs[(i + 1) % len(vs)].y - vs[(i + 1) % len(vs)].x * vs[i].y
                    for i in range(len(vs)))
        return twice // 2

    def bbox(self) -> AxisRect:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return AxisRect(min(xs), min(ys), max(xs), max(ys))

    def original_coords(self) -> list[tuple[int, int]]:
        return [(p.x // SCALE, p.y // SCALE) for p in self.vertices]

    def to_json(self) -> str:
        return json.dumps({"vertices": [list(c) for c in self.original_coords()]})


def to_internal(x: int, y: int) -> Point:
    return Point(SCALE * x, SCALE * y)


def from_internal(v: int) -> Fraction:
    return Fraction(v, SCALE)


# ---------------------------------------------------------------- parsing

def parse_domain(text: str) -> RectilinearDomain:
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise MalformedInput(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data:
        raise MalformedInput('expected an object with a "vertices" key')
    if data.get("holes"):
        raise InvalidPolygon("Hole", "domains with holes are not supported")
    raw = data["vertices"]
    if not isinstance(raw, list):
        raise MalformedInput('"vertices" must be an array')
    coords = []
    for item in raw:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in item)):
            raise MalformedInput(f"vertex {item!r} is not an [x, y] integer pair")
        coords.append((item[0], item[1]))
    return domain_from_coords(coords)


def domain_from_coords(coords: Sequence[tuple[int, int]]) -> RectilinearDomain:
    """Validate original-unit coordinates and build a normalized domain."""
    if not coords:
        raise MalformedInput("empty vertex list")
    pts = [to_internal(x, y) for x, y in coords]
    if any(abs(c) >= 2 ** 63 for p in pts for c in (p.x, p.y)):
        raise MalformedInput("coordinates exceed the 64-bit range after doubling")
    _validate(pts)
    if _signed_area2(pts) < 0:
        pts.reverse()
    start = min(range(len(pts)), key=lambda i: (pts[i].x, pts[i].y))
    return RectilinearDomain(tuple(pts[start:] + pts[:start]))


def _signed_area2(pts: Sequence[Point]) -> int:
    n = len(pts)
    return sum(pts[i].x * pts[(i + 1) % n].y - pts[(i + 1) % n].x * pts[i].y for i in range(n))


def _validate(pts: list[Point]) -> None:
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if a == b:
            raise InvalidPolygon("CollinearVertices", f"repeated vertex at index {i}")
        if a.x != b.x and a.y != b.y:
            raise InvalidPolygon("NotOrthogonal", f"edge {i} is not axis-parallel")
    if n % 2:
        raise InvalidPolygon("OddVertexCount", f"{n} vertices")
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        if (a.x == b.x) == (b.x == c.x):
            raise InvalidPolygon("CollinearVertices", f"vertex {i} joins collinear edges")
    if n < 4:
        raise InvalidPolygon("CollinearVertices", "fewer than four vertices")
    _check_simple(pts)


def _check_simple(pts: list[Point]) -> None:
    n = len(pts)
    hor: list[tuple[int, int, int]] = []   # (y, x1, x2)
    ver: list[tuple[int, int, int]] = []   # (x, y1, y2)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if a.y == b.y:
            hor.append((a.y, min(a.x, b.x), max(a.x, b.x)))
        else:
            ver.append((a.x, min(a.y, b.y), max(a.y, b.y)))

    # parallel segments on a common line may not touch at all: consecutive
    # collinear edges were rejected already, so any contact is a crossing
    for group in (hor, ver):
        group.sort()
        for (l0, lo0, hi0), (l1, lo1, hi1) in zip(group, group[1:]):
            if l0 == l1 and lo1 <= hi0:
                raise InvalidPolygon("SelfIntersecting", "overlapping collinear edges")

    # every vertical edge meets exactly its two neighbouring horizontal edges
    ys = sorted({y for y, _, _ in hor})
    tree = _Fenwick(len(ys))
    events = []
    for y, x1, x2 in hor:
        k = bisect_left(ys, y)
        events.append((x1, 0, k, 0))
        events.append((x2, 2, k, 0))
    for x, y1, y2 in ver:
        events.append((x, 1, y1, y2))
    events.sort()
    for x, kind, a, b in events:
        if kind == 0:
            tree.add(a, 1)
        elif kind == 2:
            tree.add(a, -1)
        else:
            lo, hi = bisect_left(ys, a), bisect_right(ys, b)
            if tree.prefix(hi) - tree.prefix(lo) != 2:
                raise InvalidPolygon("SelfIntersecting", f"vertical edge at x={x // SCALE} crosses the boundary")


class _Fenwick:
    def __init__(self, n: int) -> None:
        self.tree = [0] * (n + 1)

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i < len(self.tree):
            self.tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        total = 0
        while i > 0:
            total += self.tree[i]
            i -= i & -i
        return total


# ------------------------------------------------------------- predicates

def classify_vertices(d: RectilinearDomain) -> list[VertexKind]:
    vs = d.vertices
    n = len(vs)
    out = []
    for i in range(n):
        a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        out.append(VertexKind.CONVEX if cross > 0 else VertexKind.REFLEX)
    return out


def _on_boundary2(d: RectilinearDomain, px2: int, py2: int) -> bool:
    # coordinates scaled by 2 once more so rectangle centres are integral
    for a, b in d.edges():
        ax, ay, bx, by = 2 * a.x, 2 * a.y, 2 * b.x, 2 * b.y
        if ax == bx == px2 and min(ay, by) <= py2 <= max(ay, by):
            return True
        if ay == by == py2 and min(ax, bx) <= px2 <= max(ax, bx):
            return True
    return False


def _inside2(d: RectilinearDomain, px2: int, py2: int) -> bool:
    if _on_boundary2(d, px2, py2):
        return True
    crossings = 0
    for a, b in d.edges():
        if a.x != b.x:
            continue
        lo, hi = sorted((2 * a.y, 2 * b.y))
        if 2 * a.x > px2 and lo <= py2 < hi:
            crossings += 1
    return crossings % 2 == 1


def contains_point(d: RectilinearDomain, p: Point) -> bool:
    return _inside2(d, 2 * p.x, 2 * p.y)


def contains_rect(d: RectilinearDomain, r: AxisRect) -> bool:
    """Closed containment r ⊆ D, in internal units."""
    for a, b in d.edges():
        if a.x == b.x:
            lo, hi = sorted((a.y, b.y))
            if r.xmin < a.x < r.xmax and max(lo, r.ymin) < min(hi, r.ymax):
                return False
        else:
            lo, hi = sorted((a.x, b.x))
            if r.ymin < a.y < r.ymax and max(lo, r.xmin) < min(hi, r.xmax):
                return False
    return _inside2(d, r.xmin + r.xmax, r.ymin + r.ymax)


def points_r_visible(d: RectilinearDomain, p: Point, q: Point) -> bool:
    for pt in (p, q):
        if not contains_point(d, pt):
            raise PointOutsideDomain(f"{pt} is not in the domain")
    xs = _spans(p.x, q.x)
    ys = _spans(p.y, q.y)
    return any(contains_rect(d, AxisRect(x0, y0, x1, y1)) for x0, x1 in xs for y0, y1 in ys)


def _spans(a: int, b: int) -> list[tuple[int, int]]:
    if a != b:
        return [(min(a, b), max(a, b))]
    # a degenerate extent is fattened by half an original unit on either side
    return [(a - 1, a), (a, a + 1)]


def rect_from_points(points: Iterable[Point]) -> AxisRect:
    pts = list(points)
    return AxisRect(min(p.x for p in pts), min(p.y for p in pts),
                    max(p.x for p in pts), max(p.y for p in pts))
