"""Minimum horizontal / vertical mobile guard covers via tree path stabbing.

Guarding every vertical slice with horizontal slices means stabbing every
path N_G(v) of T_H with as few nodes as possible. Paths are handled deepest
apex first; when a path is still unstabbed its apex becomes a guard and the
subtree below it is marked. The chosen paths are pairwise disjoint, which
certifies optimality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import SCALE
from .lca import offline_lca
from .pixelation import PixelationGraph, gc_paused
from .slicing import Orientation, reroot


@dataclass(frozen=True)
class MobileGuardSolution:
    orientation: Orientation
    guards: tuple[int, ...]
    witness: tuple[int, ...]
    root: int

    @property
    def size(self) -> int:
        return len(self.guards)


def solve_mhsc(g: PixelationGraph, root: int | None = None, debug: bool = False) -> MobileGuardSolution:
    with gc_paused():
        return _solve(g, Orientation.H, root, debug)


def solve_mvsc(g: PixelationGraph, root: int | None = None, debug: bool = False) -> MobileGuardSolution:
    with gc_paused():
        return _solve(g, Orientation.V, root, debug)


def _solve(g: PixelationGraph, o: Orientation, root: int | None, debug: bool) -> MobileGuardSolution:
    tree = g.tree(o)
    ends = g.ends(o.other)
    apex = g.apex(o.other)
    if root is not None and root != tree.root:
        tree = reroot(tree, root)
        apex = offline_lca(tree.adjacency, root, ends)
    depth = tree.depth
    if debug:
        for t, (a, b) in enumerate(ends):
            assert depth[apex[t]] == min(depth[u] for u in tree.path(a, b))

    order = sorted(range(len(ends)), key=lambda t: (-depth[apex[t]], t))
    marked = bytearray(len(tree))
    guards, witness = [], []
    adjacency = tree.adjacency
    for t in order:
        a, b = ends[t]
        if marked[a] or marked[b]:
            continue
        top = apex[t]
        guards.append(top)
        witness.append(t)
        stack = [top]
        while stack:
            u = stack.pop()
            if marked[u]:
                continue
            marked[u] = 1
            du = depth[u]
            for w in adjacency[u]:
                if depth[w] > du and not marked[w]:
                    stack.append(w)
    return MobileGuardSolution(o, tuple(sorted(guards)), tuple(sorted(witness)), tree.root)


def verify_mobile_cover(g: PixelationGraph, guards, orientation: Orientation) -> bool:
    tree = g.tree(orientation)
    ends = g.ends(orientation.other)
    apex = g.apex(orientation.other)
    is_guard = bytearray(len(tree))
    for x in guards:
        is_guard[x] = 1
    count = [0] * len(tree)
    for u in tree.order:
        p = tree.parent[u]
        count[u] = is_guard[u] + (count[p] if p >= 0 else 0)
    return all(count[a] + count[b] - 2 * count[c] + is_guard[c] > 0
               for (a, b), c in zip(ends, apex))


def verify_certificate(g: PixelationGraph, sol: MobileGuardSolution) -> bool:
    """Witness paths are pairwise disjoint and as many as the guards."""
    if len(sol.witness) != len(sol.guards):
        return False
    tree = g.tree(sol.orientation)
    ends = g.ends(sol.orientation.other)
    used = bytearray(len(tree))
    for t in sol.witness:
        a, b = ends[t]
        for u in tree.path(a, b):
            if used[u]:
                return False
            used[u] = 1
    return True


def guard_segments(g: PixelationGraph, sol: MobileGuardSolution) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Axis midline of each guard slice, in original units: (x1, y1, x2, y2)."""
    slices = g.hslices if sol.orientation is Orientation.H else g.vslices
    out = []
    for i in sol.guards:
        r = slices[i].rect
        if sol.orientation is Orientation.H:
            y = Fraction(r.ymin + r.ymax, 2 * SCALE)
            out.append((Fraction(r.xmin, SCALE), y, Fraction(r.xmax, SCALE), y))
        else:
            x = Fraction(r.xmin + r.xmax, 2 * SCALE)
            out.append((x, Fraction(r.ymin, SCALE), x, Fraction(r.ymax, SCALE)))
    return out
