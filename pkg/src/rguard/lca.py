"""Offline lowest common ancestors (Tarjan) with an iterative DFS."""

from __future__ import annotations

from typing import Sequence


def offline_lca(adjacency: Sequence[Sequence[int]], root: int,
                queries: Sequence[tuple[int, int]]) -> list[int]:
    n = len(adjacency)
    by_node: list[list[int]] = [[] for _ in range(n)]
    for qi, (a, b) in enumerate(queries):
        by_node[a].append(qi)
        by_node[b].append(qi)

    uf = list(range(n))
    anchor = list(range(n))   # ancestor label of each union-find class
    seen = bytearray(n)
    answer = [-1] * len(queries)

    def find(x: int) -> int:
        r = x
        while uf[r] != r:
            r = uf[r]
        while uf[x] != r:
            uf[x], x = r, uf[x]
        return r

    parent = [-1] * n
    stack = [(root, 0)]
    while stack:
        u, i = stack.pop()
        if i == 0:
            seen[u] = 1
        nb = adjacency[u]
        while i < len(nb) and (nb[i] == parent[u] or seen[nb[i]]):
            i += 1
        if i < len(nb):
            w = nb[i]
            parent[w] = u
            stack.append((u, i + 1))
            stack.append((w, 0))
            continue
        # u finished: answer its queries, then merge into the parent
        for qi in by_node[u]:
            a, b = queries[qi]
            other = b if a == u else a
            if other == u:
                answer[qi] = u
            elif seen[other] == 2:
                answer[qi] = anchor[find(other)]
        seen[u] = 2
        p = parent[u]
        if p >= 0:
            ru, rp = find(u), find(p)
            uf[ru] = rp
            anchor[rp] = p
    return answer
