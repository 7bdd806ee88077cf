"""Point guards for the whole domain from dominating sets M_H, M_V.

Each block of M contributes a projected hyperguard (or its single edge),
components of M are stitched together by one connector edge per joined
pair, and the union is checked against every edge of G.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BoundExceeded, CoverageFailure
from ..geometry import SCALE
from ..mobile_guards import solve_mhsc, solve_mvsc
from ..pixelation import Edge, PixelationGraph, edge_exists, edges_r_visible
from .hyperguard import HyperguardResult, construct_hyperguard
from .refine import split_refine
from .structure import GuardGraph, blocks, build_M, components, star_case

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointGuardSolution:
    guards: tuple[Edge, ...]
    points: tuple[tuple[Fraction, Fraction], ...]
    bound: int
    m_h: int
    m_v: int
    method: str
    blocks: tuple[HyperguardResult, ...] = field(default=(), repr=False)
    connectors: tuple[Edge, ...] = ()
    stats: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.guards)


def point_bound(m_h: int, m_v: int) -> int:
    return 4 * (m_h + m_v - 1) // 3


def guard_points(g: PixelationGraph, guards) -> tuple[tuple[Fraction, Fraction], ...]:
    out = []
    for e in guards:
        r = g.pixel(e).rect
        out.append((Fraction(r.xmin + r.xmax, 2 * SCALE), Fraction(r.ymin + r.ymax, 2 * SCALE)))
    return tuple(out)


def uncovered_edges(g: PixelationGraph, guards) -> list[Edge]:
    guards = list(guards)
    return [e for e in g.edges() if not any(edges_r_visible(g, z, e) for z in guards)]


def _component_guards(g: PixelationGraph, comp: GuardGraph, reports: list) -> set:
    out: set = set()
    for block in blocks(comp):
        if len(block.edges) == 1:
            out.add(block.edges[0])
            continue
        res = construct_hyperguard(split_refine(g, block))
        reports.append(res)
        out |= res.projected
    return out


def _closed_nbhd(g: PixelationGraph, comp: GuardGraph) -> set:
    out = set()
    for h in comp.h:
        out.add(("h", h))
        out.update(("v", v) for v in g.neighbors_of_h(h))
    for v in comp.v:
        out.add(("v", v))
        out.update(("h", h) for h in g.neighbors_of_v(v))
    return out


def connectors(g: PixelationGraph, comps: list[GuardGraph]) -> tuple[list[Edge], Counter]:
    """One edge per (later component, earlier piece) pair joining the two."""
    stats: Counter = Counter()
    t = len(comps)
    if t < 2:
        return [], stats
    last: dict = {}
    for i, comp in enumerate(comps):
        for u in _closed_nbhd(g, comp):
            last[u] = i
    adj: dict = defaultdict(list)
    for h, v in g.edges():
        adj[("h", h)].append(("v", v))
        adj[("v", v)].append(("h", h))
    by_last: dict = defaultdict(list)
    for u, i in last.items():
        by_last[i].append(u)

    parent: dict = {}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    out: list[Edge] = []
    for i in range(1, t):
        for u in by_last[i - 1]:
            parent[u] = u
        for u in by_last[i - 1]:
            for w in adj[u]:
                if w in parent:
                    a, b = find(u), find(w)
                    if a != b:
                        parent[a] = b
        groups: dict = defaultdict(list)
        for a in sorted(by_last[i]):
            for b in adj[a]:
                if last[b] < i:
                    groups[find(b)].append((a, b))
        for key in sorted(groups, key=repr):
            f_all = groups[key]
            pick = {}
            for kind in ("v", "h"):
                cands = [f for f in f_all if f[0][0] == kind]
                if cands:
                    pick[kind] = max(sorted(cands), key=lambda f: sum(1 for x in f_all if set(x) & set(f)))
            if len(pick) == 1:
                (a, b), = pick.values()
                out.append(_as_edge(a, b))
            else:
                v = pick["v"][0][1]
                h = pick["h"][0][1]
                if edge_exists(g, h, v):
                    out.append((h, v))
                else:
                    stats["connector_not_edge"] += 1
                    out.extend(_as_edge(*pick[k]) for k in ("v", "h"))
        stats["groups"] += len(groups)
    return out, stats


def _as_edge(a, b) -> Edge:
    return (a[1], b[1]) if a[0] == "h" else (b[1], a[1])


def assemble(g: PixelationGraph, m_h, m_v, check: bool = True) -> PointGuardSolution:
    m = build_M(g, m_h, m_v)
    bound = point_bound(len(m.h), len(m.v))
    reports: list[HyperguardResult] = []
    links: list[Edge] = []
    stats: Counter = Counter()
    star = star_case(m)
    if star is not None:
        z = set(star)
        method = "star"
    else:
        comps = components(m)
        z = set()
        for comp in comps:
            z |= _component_guards(g, comp, reports)
        links, stats = connectors(g, comps)
        z |= set(links)
        method = "blocks"
        stats["components"] = len(comps)
    guards = tuple(sorted(z))
    if check:
        missing = uncovered_edges(g, guards)
        if missing:
            raise CoverageFailure(f"{len(missing)} pixels unseen, e.g. {missing[0]}")
        if len(guards) > bound:
            raise BoundExceeded(f"{len(guards)} guards exceed the bound {bound}")
    return PointGuardSolution(guards, guard_points(g, guards), bound, len(m.h), len(m.v),
                              method, tuple(reports), tuple(links), dict(stats))


def solve_point_guards(g: PixelationGraph, check: bool = True) -> PointGuardSolution:
    """Point guards from the minimum mobile guard covers."""
    return assemble(g, solve_mhsc(g).guards, solve_mvsc(g).guards, check)
