"""Refined guard graph M': split slices, tau, edge classes and dominance.

Coordinates inside this module are doubled once more relative to the
internal units of the pixelation graph so that split midlines stay
integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import StructureViolation
from ..geometry import AxisRect
from ..pixelation import PixelationGraph
from .region import Region, build_region
from .structure import GuardGraph

LOCAL = 2


class EdgeClass(str, Enum):
    CONVEX = "convex"
    REFLEX = "reflex"
    SIDE = "side"
    INTERNAL = "internal"


@dataclass(frozen=True)
class RefinedSlice:
    kind: str          # "h" or "v"
    origin: int        # slice id in G
    part: int          # 0 whole, 1 lower / left half, 2 upper / right half
    rect: AxisRect

    @property
    def name(self) -> str:
        return f"{self.kind}{self.origin}" + "'" * self.part


def _scaled(r: AxisRect) -> AxisRect:
    return AxisRect(r.xmin * LOCAL, r.ymin * LOCAL, r.xmax * LOCAL, r.ymax * LOCAL)


def classify_rect(region: Region, r: AxisRect, strict: bool = True) -> EdgeClass | None:
    corners = [(r.xmin, r.ymin), (r.xmax, r.ymin), (r.xmax, r.ymax), (r.xmin, r.ymax)]
    hits = [region.point_on_boundary(x, y) for x, y in corners]
    k = sum(hits)
    if k == 3:
        return EdgeClass.CONVEX
    if k == 1:
        return EdgeClass.REFLEX
    if k == 0:
        return EdgeClass.INTERNAL
    if k == 2 and any(hits[i] and hits[(i + 1) % 4] for i in range(4)):
        return EdgeClass.SIDE
    if not strict:
        return None
    raise StructureViolation(f"pixel {r} has {k} corners on the guarded region's boundary")


@dataclass
class MPrime:
    slices: list[RefinedSlice]
    hs: list[int]
    vs: list[int]
    edges: frozenset
    region: Region
    split_h: tuple[int, ...]
    split_v: tuple[int, ...]
    classes: dict = field(default_factory=dict)
    origin_classes: dict = field(default_factory=dict)
    nbrs: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        nb: dict[int, set] = {i: set() for i in self.hs + self.vs}
        for h, v in self.edges:
            nb[h].add(v)
            nb[v].add(h)
        self.nbrs = nb
        self.classes = {e: classify_rect(self.region, self.pixel(e)) for e in self.edges}

    # --- lookup -----------------------------------------------------------
    def pos(self, i: int) -> int:
        s = self.slices[i]
        return s.rect.ymin if s.kind == "h" else s.rect.xmin

    def pixel(self, e) -> AxisRect:
        h, v = e
        hr, vr = self.slices[h].rect, self.slices[v].rect
        return AxisRect(vr.xmin, hr.ymin, vr.xmax, hr.ymax)

    def find(self, kind: str, origin: int, part: int = 0) -> int:
        for i, s in enumerate(self.slices):
            if (s.kind, s.origin, s.part) == (kind, origin, part):
                return i
        raise KeyError((kind, origin, part))

    def edge(self, h: int, v: int):
        e = (h, v)
        return e if e in self.edges else None

    def tau(self, e) -> tuple[int, int]:
        h, v = e
        return self.slices[h].origin, self.slices[v].origin

    def is_split(self, i: int) -> bool:
        return self.slices[i].part != 0

    def sorted_nbrs(self, i: int) -> list[int]:
        return sorted(self.nbrs[i], key=self.pos)

    def name(self, e) -> str:
        h, v = e
        return "{" + self.slices[h].name + "," + self.slices[v].name + "}"

    def of_class(self, c: EdgeClass) -> list:
        return sorted(e for e, k in self.classes.items() if k is c)

    # --- relations -------------------------------------------------------
    def between(self, s0: int, s1: int, s2: int) -> bool:
        """Strictly between, by position across the common perpendicular column."""
        p0, p1, p2 = self.pos(s0), self.pos(s1), self.pos(s2)
        return min(p1, p2) < p0 < max(p1, p2)

    def dominates(self, e2, e1) -> bool:
        """e2 -> e1: e2 can stand in for e1 as a guard."""
        if e1 == e2:
            return True
        (h1, v1), (h2, v2) = e1, e2
        nb = self.nbrs
        if h1 == h2:
            y = self.pos(h1)
            common = [self.pos(h) for h in nb[v1] & nb[v2]]
            return any(c < y for c in common) and any(c > y for c in common)
        if v1 == v2:
            x = self.pos(v1)
            common = [self.pos(v) for v in nb[h1] & nb[h2]]
            return any(c < x for c in common) and any(c > x for c in common)
        if h2 not in nb[v1] or h1 not in nb[v2]:
            return False
        y1, y2 = self.pos(h1), self.pos(h2)
        ok_h = any((self.pos(h) - y1) * (y2 - y1) < 0 for h in nb[v1] & nb[v2])
        if not ok_h:
            return False
        x1, x2 = self.pos(v1), self.pos(v2)
        return any((self.pos(v) - x1) * (x2 - x1) < 0 for v in nb[h1] & nb[h2])

    def mutual(self, e, f) -> bool:
        return self.dominates(e, f) and self.dominates(f, e)

    # --- counts ----------------------------------------------------------
    def class_counts(self) -> dict[str, int]:
        out = {c.value: 0 for c in EdgeClass}
        for k in self.classes.values():
            out[k.value] += 1
        return out

    def identities(self) -> dict[str, bool]:
        c = self.class_counts()
        cv, rv = self.region.vertex_counts()
        n = len(self.hs) + len(self.vs)
        return {
            "c+r+s=2|V|-4": c["convex"] + c["reflex"] + c["side"] == 2 * n - 4,
            "|V|=c+s/2": 2 * n == 2 * c["convex"] + c["side"],
            "convex=vertices": c["convex"] == cv,
            "reflex=vertices": c["reflex"] == rv,
        }


def guard_region(g: PixelationGraph, block: GuardGraph) -> Region:
    h_rects, v_rects = _block_rects(g, block)
    return build_region(h_rects, v_rects, block.edges)


def _block_rects(g: PixelationGraph, block: GuardGraph) -> tuple[dict, dict]:
    return ({h: _scaled(g.hslices[h].rect) for h in block.h},
            {v: _scaled(g.vslices[v].rect) for v in block.v})


def split_refine(g: PixelationGraph, block: GuardGraph) -> MPrime:
    h_rects, v_rects = _block_rects(g, block)
    return refine_rects(h_rects, v_rects, block.edges)


def refine_rects(h_rects: dict, v_rects: dict, edges) -> MPrime:
    """Build M' from slice rectangles given in even integer units.

    ``edges`` are the (h, v) pairs of M; keys of the rect dicts become the
    origins of the refined slices.
    """
    region = build_region(h_rects, v_rects, edges)
    slices: list[RefinedSlice] = []
    split_h, split_v = [], []
    parts: dict[tuple[str, int], list[int]] = {}

    for h in sorted(h_rects):
        r = h_rects[h]
        if r.ymax - r.ymin < 2 or (r.ymin + r.ymax) % 2:
            raise StructureViolation("slice widths must be even to split")
        both = (region.horizontal_overlap(r.ymax, r.xmin, r.xmax)
                and region.horizontal_overlap(r.ymin, r.xmin, r.xmax))
        if both:
            mid = (r.ymin + r.ymax) // 2
            split_h.append(h)
            pieces = [RefinedSlice("h", h, 1, AxisRect(r.xmin, r.ymin, r.xmax, mid)),
                      RefinedSlice("h", h, 2, AxisRect(r.xmin, mid, r.xmax, r.ymax))]
        else:
            pieces = [RefinedSlice("h", h, 0, r)]
        parts[("h", h)] = list(range(len(slices), len(slices) + len(pieces)))
        slices.extend(pieces)
    for v in sorted(v_rects):
        r = v_rects[v]
        if r.xmax - r.xmin < 2 or (r.xmin + r.xmax) % 2:
            raise StructureViolation("slice widths must be even to split")
        both = (region.vertical_overlap(r.xmax, r.ymin, r.ymax)
                and region.vertical_overlap(r.xmin, r.ymin, r.ymax))
        if both:
            mid = (r.xmin + r.xmax) // 2
            split_v.append(v)
            pieces = [RefinedSlice("v", v, 1, AxisRect(r.xmin, r.ymin, mid, r.ymax)),
                      RefinedSlice("v", v, 2, AxisRect(mid, r.ymin, r.xmax, r.ymax))]
        else:
            pieces = [RefinedSlice("v", v, 0, r)]
        parts[("v", v)] = list(range(len(slices), len(slices) + len(pieces)))
        slices.extend(pieces)

    refined = frozenset((hi, vi) for h, v in edges
                        for hi in parts[("h", h)] for vi in parts[("v", v)])
    hs = sorted((i for i, s in enumerate(slices) if s.kind == "h"),
                key=lambda i: (slices[i].rect.ymin, slices[i].rect.xmin))
    vs = sorted((i for i, s in enumerate(slices) if s.kind == "v"),
                key=lambda i: (slices[i].rect.xmin, slices[i].rect.ymin))
    mp = MPrime(slices, hs, vs, refined, region, tuple(split_h), tuple(split_v))
    for h, v in edges:
        hr, vr = h_rects[h], v_rects[v]
        mp.origin_classes[(h, v)] = classify_rect(region, AxisRect(vr.xmin, hr.ymin, vr.xmax, hr.ymax),
                                                strict=False)
    return mp


def eta_h(mp: MPrime, e) -> set:
    """Edges with the same tau-image as e that share its vertical slice."""
    h, v = e
    origin = mp.slices[h].origin
    return {(x, v) for x in mp.nbrs[v] if mp.slices[x].origin == origin}


def eta_v(mp: MPrime, e) -> set:
    h, v = e
    origin = mp.slices[v].origin
    return {(h, x) for x in mp.nbrs[h] if mp.slices[x].origin == origin}


def build_X(mp: MPrime) -> dict:
    """Auxiliary graph on reflex and side edges; returns node -> set of neighbours."""
    nodes = [e for e, k in mp.classes.items() if k in (EdgeClass.REFLEX, EdgeClass.SIDE)]
    adj: dict = {e: set() for e in nodes}
    by_slice: dict[int, list] = {}
    for e in nodes:
        for s in e:
            by_slice.setdefault(s, []).append(e)
    for group in by_slice.values():
        for i, e in enumerate(group):
            for f in group[i + 1:]:
                if mp.mutual(e, f):
                    adj[e].add(f)
                    adj[f].add(e)
    for e, nb in adj.items():
        if len(nb) > 2:
            raise StructureViolation(f"node {mp.name(e)} has degree {len(nb)} in X")
    return adj


def x_census(adj: dict) -> tuple[int, int, int]:
    """(paths, cycles, isolated) component counts of a max-degree-2 graph."""
    seen: set = set()
    paths = cycles = isolated = 0
    for s in sorted(adj):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        k = 0
        while k < len(comp):
            for w in adj[comp[k]]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
            k += 1
        if len(comp) == 1:
            isolated += 1
        elif all(len(adj[u]) == 2 for u in comp):
            cycles += 1
        else:
            paths += 1
    return paths, cycles, isolated
