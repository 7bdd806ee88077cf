"""Sparse pixelation graph: vertical slices against horizontal slices.

Every neighbourhood N_G(v) is a path of T_H, so the graph is stored as two
path endpoints per slice. Membership tests use ancestor intervals of the
rooted trees and never expand a neighbourhood.
"""

from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

from .errors import TooLarge
from .geometry import AxisRect, Point, RectilinearDomain, points_r_visible
from .lca import offline_lca
from .slicing import Orientation, RTree, SideLabels, SliceSet, attach_labels, build_rtree, decompose

Edge = tuple[int, int]   # (h id, v id)


@dataclass(frozen=True)
class Pixel:
    edge: Edge
    rect: AxisRect

    @property
    def centroid(self) -> Point:
        return self.rect.centroid


@dataclass(frozen=True)
class PixelationGraph:
    hslices: SliceSet
    vslices: SliceSet
    t_h: RTree
    t_v: RTree
    v_ends: tuple[tuple[int, int], ...]    # (bottom h, top h) per vertical slice
    h_ends: tuple[tuple[int, int], ...]    # (left v, right v) per horizontal slice
    v_apex: tuple[int, ...] = field(repr=False)   # LCA in T_H of v_ends[v]
    h_apex: tuple[int, ...] = field(repr=False)   # LCA in T_V of h_ends[h]
    m: int = 0

    @property
    def n_h(self) -> int:
        return len(self.hslices)

    @property
    def n_v(self) -> int:
        return len(self.vslices)

    def tree(self, o: Orientation) -> RTree:
        return self.t_h if o is Orientation.H else self.t_v

    def ends(self, o: Orientation) -> tuple[tuple[int, int], ...]:
        """Path endpoints of the neighbourhoods of slices of orientation o."""
        return self.h_ends if o is Orientation.H else self.v_ends

    def apex(self, o: Orientation) -> tuple[int, ...]:
        return self.h_apex if o is Orientation.H else self.v_apex

    def neighbors_of_v(self, v: int) -> list[int]:
        """Horizontal neighbours of v ordered bottom to top."""
        a, b = self.v_ends[v]
        return self.t_h.path(a, b)

    def neighbors_of_h(self, h: int) -> list[int]:
        """Vertical neighbours of h ordered left to right."""
        a, b = self.h_ends[h]
        return self.t_v.path(a, b)

    def neighbors(self, o: Orientation, i: int) -> list[int]:
        return self.neighbors_of_h(i) if o is Orientation.H else self.neighbors_of_v(i)

    def edges(self) -> Iterator[Edge]:
        for v in range(self.n_v):
            for h in self.neighbors_of_v(v):
                yield (h, v)

    def pixel(self, e: Edge) -> Pixel:
        h, v = e
        hr, vr = self.hslices[h].rect, self.vslices[v].rect
        return Pixel(e, AxisRect(vr.xmin, hr.ymin, vr.xmax, hr.ymax))

    def dump(self) -> str:
        lines = [f"h {h}" for h in range(self.n_h)]
        lines += [f"v {v} {a} {b}" for v, (a, b) in enumerate(self.v_ends)]
        return "\n".join(lines) + "\n"

    def dump_edges(self) -> str:
        return "".join(f"{h} {v}\n" for h, v in sorted(self.edges()))


def build_pixelation(s_h: SliceSet, s_v: SliceSet, t_h: RTree, t_v: RTree,
                     labels_h: SideLabels, labels_v: SideLabels) -> PixelationGraph:
    # the bottom side of v lies on a horizontal boundary edge, which lies on
    # the horizontal slice at the bottom of v's column; likewise for the top
    v_ends = tuple((labels_h.edge_to_slice[lo], labels_h.edge_to_slice[hi])
                   for lo, hi in labels_v.slice_to_edges)
    h_ends = tuple((labels_v.edge_to_slice[lo], labels_v.edge_to_slice[hi])
                   for lo, hi in labels_h.slice_to_edges)
    v_apex = offline_lca(t_h.adjacency, t_h.root, v_ends)
    h_apex = offline_lca(t_v.adjacency, t_v.root, h_ends)
    dh = t_h.depth
    m = sum(dh[a] + dh[b] - 2 * dh[c] + 1 for (a, b), c in zip(v_ends, v_apex))
    return PixelationGraph(s_h, s_v, t_h, t_v, v_ends, h_ends, tuple(v_apex), tuple(h_apex), m)


def edge_exists(g: PixelationGraph, h: int, v: int) -> bool:
    a, b = g.v_ends[v]
    t = g.t_h
    return t.is_ancestor(g.v_apex[v], h) and (t.is_ancestor(h, a) or t.is_ancestor(h, b))


def edges_r_visible(g: PixelationGraph, e1: Edge, e2: Edge) -> bool:
    (h1, v1), (h2, v2) = e1, e2
    if h1 == h2 or v1 == v2:
        return True
    return edge_exists(g, h1, v2) and edge_exists(g, h2, v1)


def check_chordal_bipartite(adj: dict, cap: int = 64) -> bool:
    """Exhaustive search for a chordless cycle on six or more nodes.

    ``adj`` maps each node to the set of its neighbours (any hashable nodes).
    Use ``adjacency_of(g)`` to obtain it from a pixelation graph.
    """
    n_edges = sum(len(nb) for nb in adj.values()) // 2
    if n_edges > cap:
        raise TooLarge(f"{n_edges} edges exceed the cap of {cap}")
    rank = {u: i for i, u in enumerate(sorted(adj, key=repr))}
    for s in adj:
        # induced paths s, p1, ... through nodes ranked above s; a path that
        # closes back to s with six or more nodes is a chordless cycle
        stack = [[s, p] for p in adj[s] if rank[p] > rank[s]]
        while stack:
            path = stack.pop()
            for w in adj[path[-1]]:
                if rank[w] <= rank[s] or w in path:
                    continue
                if any(w in adj[p] for p in path[1:-1]):
                    continue
                if s in adj[w]:
                    if len(path) + 1 >= 6:
                        return False
                    continue
                stack.append(path + [w])
    return True


def adjacency_of(g: PixelationGraph) -> dict:
    adj: dict = {("h", h): set() for h in range(g.n_h)}
    adj.update({("v", v): set() for v in range(g.n_v)})
    for h, v in g.edges():
        adj[("h", h)].add(("v", v))
        adj[("v", v)].add(("h", h))
    return adj


def centroid_vision_agrees(d: RectilinearDomain, g: PixelationGraph, e1: Edge, e2: Edge,
                           p1: Point | None = None, p2: Point | None = None) -> bool:
    """Geometric and graph-side r-vision agree for points in two pixels."""
    p1 = p1 if p1 is not None else g.pixel(e1).centroid
    p2 = p2 if p2 is not None else g.pixel(e2).centroid
    return points_r_visible(d, p1, p2) == edges_r_visible(g, e1, e2)


def brute_force_edges(s_h: SliceSet, s_v: SliceSet) -> set[Edge]:
    return {(h.id, v.id) for h in s_h.slices for v in s_v.slices if h.rect.interiors_meet(v.rect)}


@contextmanager
def gc_paused():
    """Suspend the cycle collector while building large acyclic structures.

    Its generational scans grow with the live heap and make bulk
    construction visibly superlinear; reference counting still frees
    everything here.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def pixelate(d: RectilinearDomain) -> PixelationGraph:
    """Run the whole pipeline: both decompositions, trees, labels, graph."""
    with gc_paused():
        s_h = decompose(d, Orientation.H)
        s_v = decompose(d, Orientation.V)
        return build_pixelation(s_h, s_v, build_rtree(s_h), build_rtree(s_v),
                                attach_labels(d, s_h), attach_labels(d, s_v))
