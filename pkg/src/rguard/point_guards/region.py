"""The guarded region D_M of a 2-connected guard graph, on a compressed grid."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..geometry import AxisRect


@dataclass(frozen=True)
class Region:
    """A union of grid cells; cell (i, j) spans [xs[i], xs[i+1]] x [ys[j], ys[j+1]]."""

    xs: tuple[int, ...]
    ys: tuple[int, ...]
    cells: frozenset[tuple[int, int]]

    def _filled(self, i: int, j: int) -> bool:
        return (i, j) in self.cells

    def _around(self, coords: tuple[int, ...], c: int) -> tuple[int, int]:
        # indices of the cells just below and just above coordinate c
        return bisect_left(coords, c) - 1, bisect_right(coords, c) - 1

    def point_on_boundary(self, x: int, y: int) -> bool:
        ia, ib = self._around(self.xs, x)
        ja, jb = self._around(self.ys, y)
        seen = {self._filled(i, j) for i in (ia, ib) for j in (ja, jb)}
        return len(seen) == 2

    def contains_point(self, x: int, y: int) -> bool:
        ia, ib = self._around(self.xs, x)
        ja, jb = self._around(self.ys, y)
        return any(self._filled(i, j) for i in (ia, ib) for j in (ja, jb))

    def horizontal_overlap(self, y: int, x1: int, x2: int) -> bool:
        """Does the segment y, [x1, x2] share a positive length with the boundary?"""
        ja, jb = self._around(self.ys, y)
        for i in self._spans(self.xs, x1, x2):
            if self._filled(i, ja) != self._filled(i, jb):
                return True
        return False

    def vertical_overlap(self, x: int, y1: int, y2: int) -> bool:
        ia, ib = self._around(self.xs, x)
        for j in self._spans(self.ys, y1, y2):
            if self._filled(ia, j) != self._filled(ib, j):
                return True
        return False

    @staticmethod
    def _spans(coords: tuple[int, ...], lo: int, hi: int) -> Iterable[int]:
        start = bisect_right(coords, lo) - 1
        stop = bisect_left(coords, hi)
        return range(max(start, 0), stop)

    def vertex_counts(self) -> tuple[int, int]:
        """(convex, reflex) vertex counts of the region's outline."""
        convex = reflex = 0
        for i in range(len(self.xs)):
            for j in range(len(self.ys)):
                quad = [self._filled(a, b) for a in (i - 1, i) for b in (j - 1, j)]
                k = sum(quad)
                if k == 1:
                    convex += 1
                elif k == 3:
                    reflex += 1
                elif k == 2 and quad[0] == quad[3]:
                    convex += 2
        return convex, reflex

    def is_simply_connected(self) -> bool:
        if not self.cells:
            return False
        start = next(iter(self.cells))
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in self.cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if len(seen) != len(self.cells):
            return False
        # complement (with a one-cell frame) must be connected as well
        nx, ny = len(self.xs) - 1, len(self.ys) - 1
        outside = {(i, j) for i in range(-1, nx + 1) for j in range(-1, ny + 1)} - set(self.cells)
        start = (-1, -1)
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in outside and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(outside)


def build_region(h_rects: dict, v_rects: dict, edges: Iterable[tuple],
                 extra_x: Iterable[int] = (), extra_y: Iterable[int] = ()) -> Region:
    """Union of the bounding boxes of all 4-cycles.

    For a pair of horizontal nodes with at least two common neighbours, the
    4-cycles through both cover exactly the box spanned by their extreme
    common neighbours, so pairs of horizontal nodes suffice.
    """
    nbrs: dict = {h: set() for h in h_rects}
    for h, v in edges:
        nbrs[h].add(v)
    boxes = []
    for h1, h2 in combinations(sorted(h_rects, key=repr), 2):
        common = nbrs[h1] & nbrs[h2]
        if len(common) < 2:
            continue
        a, b = h_rects[h1], h_rects[h2]
        boxes.append(AxisRect(min(v_rects[v].xmin for v in common), min(a.ymin, b.ymin),
                              max(v_rects[v].xmax for v in common), max(a.ymax, b.ymax)))
    return region_from_boxes(boxes, h_rects, v_rects, extra_x, extra_y)


def region_from_boxes(boxes, h_rects: dict, v_rects: dict, extra_x=(), extra_y=()) -> Region:
    xs, ys = set(extra_x), set(extra_y)
    for r in list(h_rects.values()) + list(v_rects.values()) + list(boxes):
        xs.update((r.xmin, r.xmax))
        ys.update((r.ymin, r.ymax))
    xs_t, ys_t = tuple(sorted(xs)), tuple(sorted(ys))
    cells = set()
    for r in boxes:
        i0, i1 = bisect_left(xs_t, r.xmin), bisect_left(xs_t, r.xmax)
        j0, j1 = bisect_left(ys_t, r.ymin), bisect_left(ys_t, r.ymax)
        for i in range(i0, i1):
            for j in range(j0, j1):
                cells.add((i, j))
    return Region(xs_t, ys_t, frozenset(cells))


def region_from_all_cycles(h_rects: dict, v_rects: dict, edges: Iterable[tuple]) -> Region:
    """Definitional D_M: enumerate every 4-cycle. Exponentially slower; for tests."""
    es = set(edges)
    boxes = []
    for h1, h2 in combinations(sorted(h_rects, key=repr), 2):
        for v1, v2 in combinations(sorted(v_rects, key=repr), 2):
            if {(h1, v1), (h1, v2), (h2, v1), (h2, v2)} <= es:
                pix = [AxisRect(v_rects[v].xmin, h_rects[h].ymin, v_rects[v].xmax, h_rects[h].ymax)
                       for h in (h1, h2) for v in (v1, v2)]
                boxes.append(AxisRect(min(p.xmin for p in pix), min(p.ymin for p in pix),
                                      max(p.xmax for p in pix), max(p.ymax for p in pix)))
    return region_from_boxes(boxes, h_rects, v_rects)
