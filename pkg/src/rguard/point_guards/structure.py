"""The guard subgraph M = G[M_H + M_V] and its block decomposition."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..errors import NotDominating
from ..mobile_guards import verify_mobile_cover
from ..pixelation import Edge, PixelationGraph
from ..slicing import Orientation


@dataclass(frozen=True)
class GuardGraph:
    """An induced subgraph of G given by slice ids; edges are (h, v) pairs."""

    h: tuple[int, ...]
    v: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def order(self) -> int:
        return len(self.h) + len(self.v)

    def is_star(self) -> bool:
        return min(len(self.h), len(self.v)) == 1 and len(self.edges) == self.order - 1

    def nx_graph(self) -> nx.Graph:
        out = nx.Graph()
        out.add_nodes_from(("h", h) for h in self.h)
        out.add_nodes_from(("v", v) for v in self.v)
        out.add_edges_from((("h", h), ("v", v)) for h, v in self.edges)
        return out


def _from_nodes(nodes, edges) -> GuardGraph:
    hs = tuple(sorted(i for kind, i in nodes if kind == "h"))
    vs = tuple(sorted(i for kind, i in nodes if kind == "v"))
    return GuardGraph(hs, vs, tuple(sorted(edges)))


def build_M(g: PixelationGraph, m_h, m_v) -> GuardGraph:
    m_h, m_v = sorted(set(m_h)), sorted(set(m_v))
    if not verify_mobile_cover(g, m_h, Orientation.H):
        raise NotDominating("M_H does not meet every vertical slice")
    if not verify_mobile_cover(g, m_v, Orientation.V):
        raise NotDominating("M_V does not meet every horizontal slice")
    keep = set(m_h)
    edges = [(h, v) for v in m_v for h in g.neighbors_of_v(v) if h in keep]
    return GuardGraph(tuple(m_h), tuple(m_v), tuple(sorted(edges)))


def components(m: GuardGraph) -> list[GuardGraph]:
    graph = m.nx_graph()
    out = []
    for nodes in nx.connected_components(graph):
        edges = [(a[1], b[1]) if a[0] == "h" else (b[1], a[1]) for a, b in graph.subgraph(nodes).edges()]
        out.append(_from_nodes(nodes, edges))
    out.sort(key=lambda c: (c.h[:1], c.v[:1]))
    return out


def blocks(m: GuardGraph) -> list[GuardGraph]:
    """2-connected components; single edges count as blocks."""
    graph = m.nx_graph()
    out = []
    for comp in nx.biconnected_component_edges(graph):
        edges = [(a[1], b[1]) if a[0] == "h" else (b[1], a[1]) for a, b in comp]
        nodes = {("h", h) for h, _ in edges} | {("v", v) for _, v in edges}
        out.append(_from_nodes(nodes, edges))
    out.sort(key=lambda b: b.edges[0])
    return out


def block_cut_tree(m: GuardGraph) -> nx.Graph:
    """Bipartite tree of blocks (integers) and cut nodes (("h", i) / ("v", j))."""
    parts = blocks(m)
    tree = nx.Graph()
    cuts = set(nx.articulation_points(m.nx_graph()))
    for k, b in enumerate(parts):
        tree.add_node(k)
        for node in [("h", h) for h in b.h] + [("v", v) for v in b.v]:
            if node in cuts:
                tree.add_edge(k, node)
    return tree


def star_case(m: GuardGraph) -> tuple[Edge, ...] | None:
    """Every edge of a star; None when M is not a star."""
    if not m.is_star():
        return None
    return m.edges
