"""Exponential exact solvers used as ground truth on small instances."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .pixelation import PixelationGraph, edges_r_visible
from .slicing import Orientation


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: tuple
    explored: int


def min_set_cover(universe: int, sets: list[int]) -> tuple[int, list[int], int]:
    """Minimum cover of bits 0..universe-1 by the given bitmasks.

    Returns (size, chosen set indices, explored node count). Branches on the
    uncovered element with the fewest covering sets, bounded by a greedy
    initial solution and a ceil(uncovered / largest set) lower bound.
    """
    full = (1 << universe) - 1
    if universe == 0:
        return 0, [], 1
    covering = [[i for i, s in enumerate(sets) if s >> e & 1] for e in range(universe)]
    if any(not c for c in covering):
        raise ValueError("some element cannot be covered")
    widest = max(bin(s).count("1") for s in sets)

    best = _greedy(full, sets)
    explored = 0

    def search(covered: int, chosen: list[int]) -> None:
        nonlocal best, explored
        explored += 1
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        left = universe - bin(covered).count("1")
        if len(chosen) + -(-left // widest) >= len(best):
            return
        pick, options = -1, None
        for e in range(universe):
            if not covered >> e & 1:
                if options is None or len(covering[e]) < len(options):
                    pick, options = e, covering[e]
                    if len(options) == 1:
                        break
        options = sorted(options, key=lambda i: (-bin(sets[i] & ~covered).count("1"), i))
        for i in options:
            chosen.append(i)
            search(covered | sets[i], chosen)
            chosen.pop()

    search(0, [])
    return len(best), sorted(best), explored


def _greedy(full: int, sets: list[int]) -> list[int]:
    covered, chosen = 0, []
    while covered != full:
        i = max(range(len(sets)), key=lambda k: (bin(sets[k] & ~covered).count("1"), -k))
        chosen.append(i)
        covered |= sets[i]
    return chosen


def exact_mobile(g: PixelationGraph, orientation: Orientation, cap: int = 24) -> OracleResult:
    count = g.n_h if orientation is Orientation.H else g.n_v
    if count > cap:
        raise TooLarge(f"{count} slices exceed the cap of {cap}")
    masks = []
    for i in range(count):
        m = 0
        for j in g.neighbors(orientation, i):
            m |= 1 << j
        masks.append(m)
    universe = g.n_v if orientation is Orientation.H else g.n_h
    size, chosen, explored = min_set_cover(universe, masks)
    return OracleResult(size, tuple(chosen), explored)


def exact_point(g: PixelationGraph, cap: int | None = 32) -> OracleResult:
    edges = sorted(g.edges())
    if cap is not None and len(edges) > cap:
        raise TooLarge(f"{len(edges)} pixels exceed the cap of {cap}")
    masks = []
    for e in edges:
        m = 0
        for k, f in enumerate(edges):
            if edges_r_visible(g, e, f):
                m |= 1 << k
        masks.append(m)
    size, chosen, explored = min_set_cover(len(edges), masks)
    return OracleResult(size, tuple(edges[i] for i in chosen), explored)


def exact_msc(g: PixelationGraph, cap: int = 24) -> OracleResult:
    nodes = [("h", h) for h in range(g.n_h)] + [("v", v) for v in range(g.n_v)]
    if len(nodes) > cap:
        raise TooLarge(f"{len(nodes)} slices exceed the cap of {cap}")
    index = {u: k for k, u in enumerate(nodes)}
    masks = [1 << k for k in range(len(nodes))]
    for h, v in g.edges():
        a, b = index[("h", h)], index[("v", v)]
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    size, chosen, explored = min_set_cover(len(nodes), masks)
    return OracleResult(size, tuple(nodes[i] for i in chosen), explored)
