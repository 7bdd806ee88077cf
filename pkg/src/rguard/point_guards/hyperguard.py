"""Hyperguard construction on a refined 2-connected block.

The set Z' grows through five phases while the auxiliary graph X (reflex
and side edges, joined when mutually dominating) shrinks. A weight
function w tracks the bookkeeping behind the size bound; the quantity
3|Z'| + |V(X_j)| + w_j(X) must never increase after the first phase, and
every step is checked against that.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .refine import EdgeClass, MPrime, build_X, eta_h, eta_v

log = logging.getLogger(__name__)


@dataclass
class HyperguardResult:
    z: frozenset
    projected: frozenset
    counts: dict
    identities: dict
    ledger: list = field(default_factory=list)
    phase1_ok: bool = True
    repairs: int = 0
    stats: Counter = field(default_factory=Counter)

    @property
    def ledger_ok(self) -> bool:
        return all(b[1] <= a[1] for a, b in zip(self.ledger, self.ledger[1:]))

    @property
    def bound(self) -> Fraction:
        return Fraction(4 * self.counts["origin_nodes"] - 4, 3)


def baseline_hyperguard(mp: MPrime) -> frozenset:
    """Every non-internal edge; always a hyperguard."""
    return frozenset(e for e, k in mp.classes.items() if k is not EdgeClass.INTERNAL)


# ------------------------------------------------------------ path covers

def path_cover(nodes: list, required: set, forced: set = frozenset()) -> list | None:
    """Fewest nodes of a path dominating every required node.

    When ``forced`` is non-empty the answer must contain one of its members;
    None is returned if that is impossible.
    """
    n = len(nodes)
    if n == 0:
        return None if forced else []
    need = [u in required for u in nodes]
    hit = [u in forced for u in nodes]
    # state: (chosen, pending, forced_done) -> (cost, prev_state, chose)
    layers: list[dict] = [{}]
    layers[0][(1, 0, hit[0])] = (1, None, True)
    layers[0][(0, int(need[0]), False)] = (0, None, False)
    for i in range(1, n):
        cur: dict = {}
        for (c, p, f), (cost, _, _) in layers[-1].items():
            options = [((1, 0, f or hit[i]), cost + 1, True)]
            if not p:
                options.append(((0, int(need[i] and not c), f), cost, False))
            for st, cc, chose in options:
                if st not in cur or cc < cur[st][0]:
                    cur[st] = (cc, (c, p, f), chose)
        layers.append(cur)
    finals = [(v[0], st) for st, v in layers[-1].items() if not st[1] and (st[2] or not forced)]
    if not finals:
        return None
    _, st = min(finals)
    chosen = []
    for i in range(n - 1, -1, -1):
        _, prev, chose = layers[i][st]
        if chose:
            chosen.append(nodes[i])
        st = prev
    return chosen[::-1]


def cycle_cover(nodes: list, required: set) -> list:
    best = None
    for r in range(min(3, len(nodes))):
        rest = nodes[r + 1:] + nodes[:r]
        req = set(required) - {nodes[r], nodes[r - 1], nodes[(r + 1) % len(nodes)]}
        sub = path_cover(rest, req)
        cand = [nodes[r]] + sub
        if best is None or len(cand) < len(best):
            best = cand
    return best


# ---------------------------------------------------------------- builder

class _Builder:
    def __init__(self, mp: MPrime, x: dict):
        self.mp = mp
        self.x = x
        self.alive = set(x)
        self.z: set = set()
        self.w = {e: 1 if len(nb) == 1 else 0 for e, nb in x.items()}
        self.ledger: list = []
        self.stats: Counter = Counter()
        self.stuck: set = set()

    # --- bookkeeping --------------------------------------------------------
    def phi(self) -> int:
        return 3 * len(self.z) + len(self.alive) + sum(self.w.values())

    def record(self, label: str) -> None:
        value = self.phi()
        if self.ledger and value > self.ledger[-1][1]:
            self.stats["ledger_violations"] += 1
            log.warning("weight ledger increased at %s: %d > %d", label, value, self.ledger[-1][1])
        self.ledger.append((label, value))

    def add(self, e) -> None:
        if e in self.z:
            return
        self.z.add(e)

    def remove(self, nodes, bump: bool = True) -> None:
        nodes = set(nodes) & self.alive
        if bump:
            for r in nodes:
                for u in self.x[r]:
                    if u in self.alive and u not in nodes:
                        self.w[u] += 1
        self.alive -= nodes

    def nb(self, e) -> list:
        return [u for u in self.x[e] if u in self.alive]

    def component(self, s) -> list:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.nb(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return sorted(seen)

    def ordered(self, comp: list) -> tuple[list, bool]:
        """Nodes of a path or cycle in traversal order, and whether it is a cycle."""
        ends = [u for u in comp if len(self.nb(u)) < 2]
        cycle = not ends and len(comp) > 2
        start = min(ends) if ends else min(comp)
        out = [start]
        prev = None
        cur = start
        while True:
            nxt = sorted(u for u in self.nb(cur) if u != prev and u not in out[-2:])
            if not nxt or nxt[0] == start:
                break
            prev, cur = cur, nxt[0]
            out.append(cur)
            if len(out) > len(comp):
                break
        return out, cycle

    def components(self) -> list[list]:
        seen: set = set()
        out = []
        for s in sorted(self.alive):
            if s not in seen:
                comp = self.component(s)
                seen.update(comp)
                out.append(comp)
        return out

    @staticmethod
    def shared(e, f):
        common = set(e) & set(f)
        return next(iter(common)) if len(common) == 1 else None

    def as_edge(self, a: int, b: int):
        h, v = (a, b) if self.mp.slices[a].kind == "h" else (b, a)
        if self.mp.slices[h].kind != "h" or self.mp.slices[v].kind != "v":
            return None
        return (h, v) if (h, v) in self.mp.edges else None

    # --- phase 1 ----------------------------------------------------------
    def phase1(self) -> None:
        mp, x = self.mp, self.x
        conv = mp.of_class(EdgeClass.CONVEX)
        s1 = [e for e in sorted(x) if (mp.is_split(e[0]) or mp.is_split(e[1]))
              and mp.origin_classes.get(mp.tau(e)) is EdgeClass.SIDE]
        tau_c = {mp.tau(c) for c in conv}
        u1 = [e for e in sorted(x) if mp.tau(e) in tau_c]
        su = set(s1) | set(u1)

        w_set: set = set()
        for e1 in su:
            for e2 in x[e1]:
                for e3 in x[e2]:
                    if e3 == e1:
                        continue
                    for e4 in x[e3]:
                        if e4 in su and e4 not in (e1, e2):
                            w_set.update((e1, e2, e3, e4))

        def nx_of(nodes) -> set:
            out = set()
            for a in nodes:
                out.update(x.get(a, ()))
            return out

        q_h, q_v = set(), set()
        for e in s1:
            for f in x[e]:
                for axis, eta, target in ((0, eta_h, q_h), (1, eta_v, q_v)):
                    if e[axis] != f[axis] or not mp.is_split(e[axis]):
                        continue
                    left = eta(mp, f) - {f}
                    right = nx_of(eta(mp, e)) - {f}
                    if left and all(mp.dominates(a, b) for a in left for b in right):
                        target.add(f)
        q1 = q_h | q_v

        w0_total = sum(self.w.values())
        x0 = len(self.alive)
        for e in sorted(set(conv) | q1):
            for g in sorted(eta_h(mp, e) | eta_v(mp, e)):
                self.add(g)
        drop = set(q1) | nx_of(q1) | set(u1) | nx_of(u1)
        w = self.w
        for e in s1:
            w[e] -= 1
        for e in u1:
            w[e] -= 1
        for f in list(q1) + list(u1):
            for g in nx_of(nx_of([f])) - {f} - w_set:
                w[g] += 1
        self.remove(drop, bump=False)

        self.stats.update({"S'": len(s1), "U'": len(u1), "Q'": len(q1), "Q'_H&Q'_V": len(q_h & q_v),
                           "W'": len(w_set)})
        self.stats["negative_w"] += sum(1 for v in w.values() if v < 0)
        b_count = 2 * (len(mp.split_h) + len(mp.split_v))
        lhs = 3 * len(self.z) + len(self.alive) + sum(w.values())
        rhs = 3 * len(conv) + x0 + w0_total + b_count
        self.phase1_ok = lhs <= rhs
        # the closed formula above can leave an end node with the wrong
        # weight; the invariants (ends carry 1, isolated nodes 2) win
        for e in sorted(self.alive):
            d = len(self.nb(e))
            want = {0: 2, 1: 1}.get(d)
            if want is not None and w[e] != want:
                self.stats["phase1_weight_restored"] += 1
                w[e] = want
        if 3 * len(self.z) + len(self.alive) + sum(w.values()) > rhs:
            self.stats["phase1_bound_after_restore"] += 1
        self.record("phase1")

    # --- phases 2 and 3 -----------------------------------------------------
    def _choose(self, sig, e, b: int):
        """Pick the guard near position b and the removal window (indices into e)."""
        mp = self.mp
        f = self.as_edge(sig(b - 2), sig(b + 1))
        if not mp.dominates(f, e(b)):
            self.stats["chord_not_dominating"] += 1
        left = mp.between(sig(b + 1), sig(b - 1), sig(b - 3))
        right = mp.between(sig(b - 2), sig(b), sig(b + 2))
        if left and right:
            return f, range(b - 2, b + 3)
        if not left:
            g, window = self.as_edge(sig(b - 3), sig(b)), range(b - 3, b + 2)
        else:
            g, window = self.as_edge(sig(b - 1), sig(b + 2)), range(b - 1, b + 4)
        if g is None:
            self.stats["second_chord_missing"] += 1
            return f, range(b - 2, b + 3)
        return g, window

    def _check_removed(self, guard, removed) -> None:
        for r in removed:
            if not self.mp.dominates(guard, r):
                self.stats["removed_not_dominated"] += 1

    def phase2(self) -> None:
        while True:
            cyc = None
            for comp in self.components():
                key = frozenset(comp)
                if key in self.stuck:
                    continue
                order, is_cycle = self.ordered(comp)
                if is_cycle and len(order) == len(comp):
                    cyc = order
                    break
            if cyc is None:
                return
            if not self._cut_cycle(cyc):
                self.stuck.add(frozenset(cyc))
                self.stats["cycles_stuck"] += 1

    def _cut_cycle(self, cyc: list) -> bool:
        n = len(cyc)
        s = [self.shared(cyc[i], cyc[(i + 1) % n]) for i in range(n)]
        if None in s or any(s[i] == s[i - 1] for i in range(n)):
            return False
        gap, start = n, 0
        last: dict = {}
        for i in range(2 * n):
            key = s[i % n]
            if key in last and 0 < i - last[key] < gap:
                gap, start = i - last[key], last[key] % n
            last[key] = i
        e = lambda i: cyc[(start + i) % n]          # noqa: E731
        sig = lambda i: s[(start + i) % n]          # noqa: E731
        if gap == 4:
            guard = e(n)
            removed = {e(n - 1), e(n), e(1), e(2), e(3)}
        else:
            own = set(cyc)
            for b in range(2, gap):
                if self.as_edge(sig(b - 2), sig(b + 1)) not in (None, *own):
                    break
            else:
                return False
            guard, window = self._choose(sig, e, b)
            removed = {e(i) for i in window}
        self._check_removed(guard, removed)
        self.add(guard)
        self.remove(removed)
        self.stats["phase2_steps"] += 1
        self.record("phase2")
        return True

    def phase3(self) -> None:
        while True:
            progressed = False
            for comp in self.components():
                key = frozenset(comp)
                if key in self.stuck or len(comp) < 5:
                    continue
                order, is_cycle = self.ordered(comp)
                if is_cycle or len(order) != len(comp):
                    continue
                outcome = self._cut_path(order)
                if outcome is None:
                    continue
                if outcome:
                    progressed = True
                    break
                self.stuck.add(key)
                self.stats["paths_stuck"] += 1
            if not progressed:
                return

    def _cut_path(self, path: list):
        k = len(path)
        inner = [self.shared(path[i], path[i + 1]) for i in range(k - 1)]
        if None in inner or any(inner[i] == inner[i - 1] for i in range(1, len(inner))):
            return False
        first = [u for u in path[0] if u != inner[0]][0]
        last = [u for u in path[-1] if u != inner[-1]][0]
        sigma = [first] + inner + [last]            # sigma[i] for i = 0..k
        slices = set(inner)
        own = set(path[1:-1])
        extra = any((h, v) in self.mp.edges and (h, v) not in own
                    for h in slices for v in slices)
        if not extra:
            return None

        def sig(i):
            return sigma[min(max(i, 0), k)]

        def e(i):
            return path[i - 1]

        for b in range(3, k - 1):
            if self.as_edge(sig(b - 2), sig(b + 1)) not in (None, *path):
                break
        else:
            return False
        guard, window = self._choose(sig, e, b)
        removed = {e(i) for i in window if 1 <= i <= k}
        self._check_removed(guard, removed)
        self.add(guard)
        self.remove(removed)
        self.stats["phase3_steps"] += 1
        self.record("phase3")
        return True

    # --- phase 4 -----------------------------------------------------------
    def htree(self) -> tuple[int, dict, dict]:
        mp = self.mp
        adj: dict = {h: set() for h in mp.hs}
        for v in mp.vs:
            col = mp.sorted_nbrs(v)
            for a, b in zip(col, col[1:]):
                adj[a].add(b)
                adj[b].add(a)
        rank = {h: i for i, h in enumerate(mp.hs)}
        root = min(mp.hs, key=lambda h: (-mp.slices[h].rect.ymax, rank[h]))
        parent = {root: None}
        dist = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u], key=rank.get):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        return root, parent, dist

    def necks(self) -> list[tuple]:
        mp = self.mp
        _, parent, dist = self.htree()
        rank = {h: i for i, h in enumerate(mp.hs)}
        out = []
        for h3 in sorted(dist, key=lambda h: (-dist[h], rank[h])):
            h4 = parent[h3]
            if h4 is None:
                continue
            common = mp.nbrs[h3] & mp.nbrs[h4]
            if len(common) < 2:
                self.stats["neck_without_cycle"] += 1
                continue
            v3 = min(common, key=mp.pos)
            v4 = max(common, key=mp.pos)
            out.append((h3, h4, v3, v4))
        return out

    def is_neck(self, h3, h4, v3, v4) -> bool:
        quad = [(h3, v3), (h3, v4), (h4, v3), (h4, v4)]
        return all(self.mp.classes[q] is EdgeClass.REFLEX for q in quad)

    def neck_guarded(self, z, h3, h4, v3, v4) -> bool:
        dom = self.mp.dominates
        return any((dom(g, (h3, v3)) and dom(g, (h3, v4))) or (dom(g, (h4, v3)) and dom(g, (h4, v4)))
                   for g in z)

    def phase4(self) -> None:
        for h3, h4, v3, v4 in self.necks():
            if not self.is_neck(h3, h4, v3, v4):
                continue
            self.stats["necks"] += 1
            if self.neck_guarded(self.z, h3, h4, v3, v4):
                self.stats["necks_already_guarded"] += 1
                continue
            a, b = (h3, v3), (h3, v4)
            pa = self.component(a) if a in self.alive else []
            pb = self.component(b) if b in self.alive else []
            if pa and pb and set(pa) != set(pb):
                parts = [self.ordered(pa)[0], self.ordered(pb)[0]]
                p1, p2 = parts
            else:
                comp = pa or pb
                order = self.ordered(comp)[0] if comp else []
                parts = [order] if order else []
                if a in order and b in order and abs(order.index(a) - order.index(b)) == 1:
                    cut = max(order.index(a), order.index(b))
                    lo, hi = order[:cut], order[cut:]
                    p1, p2 = (lo, hi) if a in lo else (hi, lo)
                else:
                    p1, p2 = order, []
            nodes = [u for part in parts for u in part]
            required = set(nodes)
            if len(p1) % 3 or len(p2) % 3:
                y = self._forced_cover(parts, required, {a, b})
                for g in y:
                    self.add(g)
                self.remove(nodes, bump=False)
                for u in nodes:
                    self.w[u] = 0
                self.stats["phase4_case_i"] += 1
            else:
                y = [g for part in parts for g in path_cover(part, required)]
                cands = [(h4, v3), (h4, v4)]
                fj = next((c for c in cands if c in self.alive or c in self.z), cands[0])
                for g in y + [fj]:
                    self.add(g)
                drop = set(nodes)
                if fj in self.alive:
                    drop |= {fj} | set(self.nb(fj))
                self.remove(drop)
                for u in nodes + cands:
                    if u in self.w:
                        self.w[u] = 0
                self.stats["phase4_case_ii"] += 1
            self.record("phase4")
            if not self.neck_guarded(self.z, h3, h4, v3, v4):
                self.stats["neck_left_unguarded"] += 1

    def _forced_cover(self, parts: list[list], required: set, forced: set) -> list:
        best = None
        for k in range(len(parts)):
            pick = []
            for i, part in enumerate(parts):
                sub = path_cover(part, required, forced & set(part) if i == k else frozenset())
                if sub is None:
                    break
                pick += sub
            else:
                if best is None or len(pick) < len(best):
                    best = pick
        if best is None:
            best = [g for part in parts for g in path_cover(part, required)]
            self.stats["forced_cover_missing"] += 1
        return best

    # --- phase 5 ------------------------------------------------------------
    def phase5(self) -> None:
        for comp in self.components():
            order, is_cycle = self.ordered(comp)
            required = set(comp)
            if is_cycle:
                y = cycle_cover(order, required)
            elif len(order) == len(comp):
                y = path_cover(order, required)
            else:
                self.stats["phase5_irregular"] += 1
                y = sorted(required)
            for g in y:
                self.add(g)
            self.remove(comp, bump=False)
            for u in comp:
                self.w[u] = 0
            self.stats["phase5_steps"] += 1
            self.record("phase5")


# ----------------------------------------------------------------- checks

def hyperguard_violations(mp: MPrime, z) -> dict[str, list]:
    """Failures of the three hyperguard properties (property 3 on necks only)."""
    z = set(z)
    b = _Builder(mp, {})
    out: dict[str, list] = {"convex": [], "dominated": [], "neck": []}
    for e, k in sorted(mp.classes.items()):
        if k is EdgeClass.CONVEX and e not in z:
            out["convex"].append(e)
        elif k is not EdgeClass.INTERNAL and e not in z and not any(mp.dominates(g, e) for g in z):
            out["dominated"].append(e)
    for quad in b.necks():
        if b.is_neck(*quad) and not b.neck_guarded(z, *quad):
            out["neck"].append(quad)
    return out


def construct_hyperguard(mp: MPrime, x: dict | None = None) -> HyperguardResult:
    x = build_X(mp) if x is None else x
    b = _Builder(mp, x)
    b.phase1()
    b.phase2()
    b.phase3()
    b.phase4()
    b.phase5()

    repairs = 0
    bad = hyperguard_violations(mp, b.z)
    for e in bad["convex"] + bad["dominated"]:
        b.z.add(e)
        repairs += 1
    for h3, _, v3, _ in bad["neck"]:
        b.z.add((h3, v3))
        repairs += 1
    if repairs:
        log.warning("hyperguard needed %d repairs", repairs)

    counts = mp.class_counts()
    counts["nodes"] = len(mp.hs) + len(mp.vs)
    counts["origin_nodes"] = counts["nodes"] - len(mp.split_h) - len(mp.split_v)
    counts["x_nodes"] = len(x)
    projected = frozenset(mp.tau(e) for e in b.z)
    res = HyperguardResult(frozenset(b.z), projected, counts, mp.identities(), b.ledger,
                           b.phase1_ok, repairs, b.stats)
    return res
