"""Slice decompositions S_H / S_V and their intersection trees.

A single bottom-up sweep produces the horizontal slices, the pairs of
slices that share a cut segment, and the labels tying boundary edges to
slices. Vertical slices reuse the same sweep on the transposed polygon.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum

from sortedcontainers import SortedList

from .geometry import SCALE, AxisRect, RectilinearDomain


class Orientation(str, Enum):
    H = "H"
    V = "V"

    @property
    def other(self) -> "Orientation":
        return Orientation.V if self is Orientation.H else Orientation.H


@dataclass(frozen=True)
class Slice:
    id: int
    rect: AxisRect
    orientation: Orientation


@dataclass(frozen=True)
class SliceSet:
    """Slices of one orientation plus sweep by-products.

    ``edge_slice`` maps each boundary edge parallel to the slices (by its
    index in the domain's vertex cycle) to the slice whose side contains it.
    ``side_edges[i]`` holds the two boundary edges containing the short
    sides of slice ``i``: (left, right) for horizontal slices and
    (bottom, top) for vertical ones.
    """

    orientation: Orientation
    slices: tuple[Slice, ...]
    cut_pairs: tuple[tuple[int, int], ...] = field(repr=False)
    edge_slice: dict[int, int] = field(repr=False, compare=False)
    side_edges: tuple[tuple[int, int], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.slices)

    def __getitem__(self, i: int) -> Slice:
        return self.slices[i]

    def dump(self) -> str:
        lines = []
        for s in self.slices:
            r = s.rect
            coords = (r.xmin, r.ymin, r.xmax, r.ymax)
            lines.append(f"{s.id} {s.orientation.value} " + " ".join(str(c // SCALE) for c in coords))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SideLabels:
    edge_to_slice: dict[int, int]
    slice_to_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RTree:
    orientation: Orientation
    adjacency: tuple[tuple[int, ...], ...]
    root: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]
    order: tuple[int, ...]          # BFS order from the root
    tin: tuple[int, ...] = field(repr=False)
    tout: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, nb in enumerate(self.adjacency) for b in nb if a < b]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when a lies on the root path of b (a node is its own ancestor)."""
        return self.tin[a] <= self.tin[b] and self.tout[b] <= self.tout[a]

    def path(self, a: int, b: int) -> list[int]:
        """Nodes of the tree path from a to b, both ends included."""
        left, right = [], []
        while a != b:
            if self.depth[a] >= self.depth[b]:
                left.append(a)
                a = self.parent[a]
            else:
                right.append(b)
                b = self.parent[b]
        return left + [a] + right[::-1]

    def dump(self) -> str:
        return "".join(f"{a} {b}\n" for a, b in self.edges())


def decompose(d: RectilinearDomain, o: Orientation) -> SliceSet:
    if o is Orientation.H:
        pts = [(p.x, p.y) for p in d.vertices]
        rects, pairs, edge_slice, sides = _sweep(pts, ccw=True)
        boxes = [AxisRect(x1, y1, x2, y2) for x1, x2, y1, y2 in rects]
    else:
        pts = [(p.y, p.x) for p in d.vertices]
        rects, pairs, edge_slice, sides = _sweep(pts, ccw=False)
        boxes = [AxisRect(y1, x1, y2, x2) for x1, x2, y1, y2 in rects]
    slices = tuple(Slice(i, r, o) for i, r in enumerate(boxes))
    return SliceSet(o, slices, tuple(pairs), edge_slice, tuple(sides))


def _sweep(pts, ccw):
    """Sweep upward in the given frame; returns rects as (x1, x2, y1, y2)."""
    n = len(pts)
    levels = defaultdict(list)
    walls = defaultdict(list)
    for i in range(n):
        (ax, ay), (bx, by) = pts[i], pts[(i + 1) % n]
        if ay == by:
            # the interior lies on the left of each directed edge when ccw
            bottom = (bx > ax) == ccw
            levels[ay].append((min(ax, bx), max(ax, bx), i, bottom))
        else:
            walls[ax].append((min(ay, by), max(ay, by), i))

    lefts = SortedList()
    active: dict[int, tuple[int, int, int]] = {}    # x1 -> (x2, y_start, open id)
    rects: list[list[int]] = []
    pairs: list[tuple[int, int]] = []
    edge_open: dict[int, int] = {}

    for y in sorted(levels):
        edges = levels[y]
        touched = set()
        for a, b, _, _ in edges:
            for x1 in lefts.irange(maximum=b, reverse=True):
                if active[x1][0] < a:
                    break
                touched.add(x1)
        closed = []
        parity = Counter()
        for x1 in sorted(touched):
            x2, _, oid = active.pop(x1)
            lefts.remove(x1)
            rects[oid][3] = y
            closed.append((x1, x2, oid))
            parity[x1] += 1
            parity[x2] += 1
        for a, b, _, _ in edges:
            parity[a] += 1
            parity[b] += 1
        ends = sorted(x for x, c in parity.items() if c % 2)
        opened = []
        for k in range(0, len(ends), 2):
            x1, x2 = ends[k], ends[k + 1]
            oid = len(rects)
            rects.append([x1, x2, y, None])
            active[x1] = (x2, y, oid)
            lefts.add(x1)
            opened.append((x1, x2, oid))

        i = j = 0
        while i < len(closed) and j < len(opened):
            c, o = closed[i], opened[j]
            if max(c[0], o[0]) < min(c[1], o[1]):
                pairs.append((c[2], o[2]))
            if c[1] <= o[1]:
                i += 1
            else:
                j += 1

        closed_lefts = [c[0] for c in closed]
        opened_lefts = [o[0] for o in opened]
        for a, _, idx, bottom in edges:
            pool, keys = (opened, opened_lefts) if bottom else (closed, closed_lefts)
            edge_open[idx] = pool[bisect_right(keys, a) - 1][2]

    assert not active, "sweep ended with open slices"
    order = sorted(range(len(rects)), key=lambda k: (rects[k][2], rects[k][0]))
    new_id = {old: new for new, old in enumerate(order)}
    out_rects = [tuple(rects[k]) for k in order]
    out_pairs = sorted((min(new_id[a], new_id[b]), max(new_id[a], new_id[b])) for a, b in pairs)
    edge_slice = {e: new_id[oid] for e, oid in edge_open.items()}

    for x in walls:
        walls[x].sort()
    wall_lows = {x: [w[0] for w in ws] for x, ws in walls.items()}

    def wall_at(x, y1):
        k = bisect_right(wall_lows[x], y1) - 1
        return walls[x][k][2]

    sides = [(wall_at(x1, y1), wall_at(x2, y1)) for x1, x2, y1, _ in out_rects]
    return out_rects, out_pairs, edge_slice, sides


def build_rtree(s: SliceSet, root: int = 0) -> RTree:
    n = len(s)
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in s.cut_pairs:
        adj[a].append(b)
        adj[b].append(a)
    if len(s.cut_pairs) != n - 1:
        raise AssertionError("slice adjacency is not a tree")
    return _rooted(s.orientation, [sorted(nb) for nb in adj], root)


def reroot(tree: RTree, root: int) -> RTree:
    return _rooted(tree.orientation, tree.adjacency, root)


def _rooted(o: Orientation, adj, root: int) -> RTree:
    n = len(adj)
    parent = [-1] * n
    depth = [-1] * n
    depth[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                order.append(w)
                queue.append(w)
    if len(order) != n:
        raise AssertionError("slice adjacency is not connected")

    tin = [0] * n
    tout = [0] * n
    clock = 0
    stack = [(root, False)]
    while stack:
        u, done = stack.pop()
        if done:
            tout[u] = clock
            clock += 1
            continue
        tin[u] = clock
        clock += 1
        stack.append((u, True))
        for w in adj[u]:
            if w != parent[u]:
                stack.append((w, False))
    return RTree(o, tuple(tuple(nb) for nb in adj), root, tuple(parent),
                 tuple(depth), tuple(order), tuple(tin), tuple(tout))


def attach_labels(d: RectilinearDomain, s: SliceSet) -> SideLabels:
    del d  # labels are recorded during the sweep
    return SideLabels(dict(s.edge_slice), s.side_edges)
