"""Polygon families: combs, the sharpness examples, and random domains."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import UnsupportedParameter
from .geometry import RectilinearDomain, domain_from_coords


class Family(str, Enum):
    COMB = "comb"
    SHARPNESS = "sharpness"
    RANDOM = "random"


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    k: int
    seed: int = 0

    def build(self) -> RectilinearDomain:
        if self.family is Family.COMB:
            return comb(self.k)
        if self.family is Family.SHARPNESS:
            return sharpness(self.k)
        return random_domain(self.k, self.seed)


def simplify(coords: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Drop repeated points and vertices lying inside a straight run."""
    pts = [p for i, p in enumerate(coords) if p != coords[i - 1]]
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
                del pts[i]
                changed = True
                break
    return pts


def comb(k: int) -> RectilinearDomain:
    """Spine [0,2k-1]x[0,1] with k teeth [2i,2i+1]x[-5,0]; the last tooth is flush."""
    if k < 1:
        raise UnsupportedParameter("comb needs at least one tooth")
    coords = [(0, 1), (0, -5)]
    for i in range(k):
        coords += [(2 * i + 1, -5), (2 * i + 1, 0)] if i < k - 1 else [(2 * i + 1, -5), (2 * i + 1, 1)]
        if i < k - 1:
            coords += [(2 * i + 2, 0), (2 * i + 2, -5)]
    return domain_from_coords(simplify(coords))


# Sharpness examples in original units. Their (m_V + m_H, p) pairs are
# confirmed by the solvers and the exact oracle in tests.
PLUS = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0), (3, -1), (2, -1), (2, -2), (1, -2), (1, -1), (0, -1)]
DOUBLE_PLUS = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0), (3, -1), (2, -1), (2, -2), (3, -2), (3, -3),
               (2, -3), (2, -4), (1, -4), (1, -3), (0, -3), (0, -2), (1, -2), (1, -1), (0, -1)]
NOTCHED_SQUARE = [(0, 0), (-1, 0), (-1, 2), (1, 2), (1, 1), (2, 1), (2, 2), (4, 2), (4, 0), (3, 0), (3, -1),
                  (4, -1), (4, -3), (2, -3), (2, -2), (1, -2), (1, -3), (-1, -3), (-1, -1), (0, -1)]
NOTCHED_SQUARE_ONE_PLUS = [(0, 0), (-1, 0), (-1, 2), (1, 2), (1, 1), (2, 1), (2, 2), (4, 2), (4, 1), (5, 1),
                           (5, 2), (6, 2), (6, 1), (7, 1), (7, 0), (6, 0), (6, -1), (5, -1), (5, 0), (3, 0),
                           (3, -1), (4, -1), (4, -3), (2, -3), (2, -2), (1, -2), (1, -3), (-1, -3), (-1, -1),
                           (0, -1)]
NOTCHED_SQUARE_TWO_PLUS = [(0, 0), (-1, 0), (-1, 2), (1, 2), (1, 1), (2, 1), (2, 2), (4, 2), (4, 1), (6, 1),
                           (6, 2), (7, 2), (7, 1), (8, 1), (8, 0), (7, 0), (7, -1), (8, -1), (8, -2), (7, -2),
                           (7, -3), (6, -3), (6, -2), (5, -2), (5, -1), (6, -1), (6, 0), (3, 0), (3, -1),
                           (4, -1), (4, -3), (2, -3), (2, -2), (1, -2), (1, -3), (-1, -3), (-1, -1), (0, -1)]
NOTCHED_CHAIN = [(0, 1), (2, 1), (2, 0), (3, 0), (3, 1), (5, 1), (5, 0), (6, 0), (6, 1), (8, 1), (8, 0), (9, 0),
                 (9, 1), (11, 1), (11, 0), (12, 0), (12, 1), (14, 1), (14, 0), (15, 0), (15, 1), (17, 1),
                 (17, -1), (16, -1), (16, -2), (17, -2), (17, -4), (16, -4), (16, -5), (17, -5), (17, -7),
                 (16, -7), (16, -8), (17, -8), (17, -10), (15, -10), (15, -9), (14, -9), (14, -10), (12, -10),
                 (12, -8), (13, -8), (13, -7), (12, -7), (12, -5), (14, -5), (14, -6), (15, -6), (15, -3),
                 (14, -3), (14, -4), (12, -4), (12, -2), (13, -2), (13, -1), (10, -1), (10, -2), (11, -2),
                 (11, -4), (9, -4), (9, -3), (8, -3), (8, -4), (6, -4), (6, -2), (7, -2), (7, -1), (4, -1),
                 (4, -2), (5, -2), (5, -4), (3, -4), (3, -3), (2, -3), (2, -4), (0, -4), (0, -2), (1, -2),
                 (1, -1), (0, -1)]

# Drawn with the two plus signs sharing one column: the corridor row then
# lets the square's guards see the upper plus, so p is 5, not 6.
STACKED_PLUS_ON_CORRIDOR = NOTCHED_SQUARE_TWO_PLUS

FIXED = {
    2: (PLUS, 1),
    3: (DOUBLE_PLUS, 2),
    4: (NOTCHED_SQUARE, 4),
    5: (NOTCHED_SQUARE_ONE_PLUS, 5),
    13: (NOTCHED_CHAIN, 16),
}


def sharpness(total: int) -> RectilinearDomain:
    """A domain with m_V + m_H = total on which p meets the 4/3 bound where possible.

    Totals 3k+1 use a row of k notched squares joined along their middle
    row; one or two plus signs appended to the row give 3k+2 and 3k+3.
    """
    if total < 2:
        raise UnsupportedParameter("m_V + m_H is at least 2")
    if total in FIXED:
        return domain_from_coords(FIXED[total][0])
    k, extra = divmod(total - 1, 3)
    return domain_from_coords(_trace(_square_row(k, extra)))


def expected_point_guards(total: int) -> int:
    if total in FIXED:
        return FIXED[total][1]
    k, extra = divmod(total - 1, 3)
    return 4 * k + extra


def _block(x0: int, y0: int, x1: int, y1: int) -> set:
    return {(i, j) for i in range(x0, x1) for j in range(y0, y1)}


def _plus(cx: int, cy: int) -> set:
    return _block(cx, cy - 1, cx + 1, cy + 2) | _block(cx - 1, cy, cx + 2, cy + 1)


def _square_row(k: int, extra: int) -> set:
    square = (_block(-1, -3, 4, 2) - _block(1, 1, 2, 2) - _block(3, -1, 4, 0)
              - _block(1, -3, 2, -2) - _block(-1, -1, 0, 0))
    cells: set = set()
    for b in range(k):
        cells |= {(i + 6 * b, j) for i, j in square}
        if b:
            cells |= _block(6 * b - 2, 0, 6 * b - 1, 1)
    end = 6 * (k - 1) + 4
    if extra >= 1:
        cells |= _block(end, 0, end + 1, 1) | _plus(end + 1, 0)
    if extra >= 2:
        cells |= _plus(end + 3, 0)
    return cells


# ----------------------------------------------------------------- random

def random_domain(n_target: int, seed: int) -> RectilinearDomain:
    """Carve cells out of a rectangle until the outline has about n_target vertices."""
    if n_target < 4 or n_target % 2:
        raise UnsupportedParameter("n_target must be even and at least 4")
    rng = random.Random(seed)
    for _ in range(100):
        cols = rng.randint(2, max(2, n_target // 4 + 2))
        rows = rng.randint(2, max(2, n_target // 4 + 2))
        cells = {(i, j) for i in range(cols) for j in range(rows)}
        n = 4
        stalls = 0
        while n < n_target - 2 and stalls < 200:
            cand = _removable(cells, cols, rows)
            rng.shuffle(cand)
            for c in cand:
                trial = cells - {c}
                if not _connected(trial):
                    continue
                m = len(_trace(trial))
                if m <= n_target + 4:
                    cells, n = trial, m
                    stalls = 0
                    break
            else:
                stalls = 200
        if abs(n - n_target) <= 4:
            xs = _axis(rng, cols)
            ys = _axis(rng, rows)
            return domain_from_coords([(xs[i], ys[j]) for i, j in _trace(cells)])
    raise RuntimeError("random_domain failed to reach the target size")


def _axis(rng: random.Random, count: int) -> list[int]:
    out = [0]
    for _ in range(count):
        out.append(out[-1] + rng.randint(1, 3))
    return out


def _removable(cells: set, cols: int, rows: int) -> list:
    """Cells touching the outside whose removal creates no corner pinch."""
    out = []
    for c in sorted(cells):
        i, j = c
        if all((i + di, j + dj) in cells for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1))):
            continue
        if len(cells) > 1 and not _pinches(cells, c):
            out.append(c)
    return out


def _pinches(cells: set, removed: tuple[int, int]) -> bool:
    i, j = removed
    for ox in (0, -1):
        for oy in (0, -1):
            block = [(i + ox + a, j + oy + b) for a in (0, 1) for b in (0, 1)]
            inside = [(p in cells and p != removed) for p in block]
            # block order: (0,0) (0,1) (1,0) (1,1); diagonal pairs are 0/3 and 1/2
            if inside == [True, False, False, True] or inside == [False, True, True, False]:
                return True
    return False


def _connected(cells: set) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        i, j = queue.popleft()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


def _trace(cells: set) -> list[tuple[int, int]]:
    """Counter-clockwise outline of a pinch-free, hole-free polyomino."""
    nxt = {}
    for i, j in cells:
        if (i, j - 1) not in cells:
            nxt[(i, j)] = (i + 1, j)
        if (i + 1, j) not in cells:
            nxt[(i + 1, j)] = (i + 1, j + 1)
        if (i, j + 1) not in cells:
            nxt[(i + 1, j + 1)] = (i, j + 1)
        if (i - 1, j) not in cells:
            nxt[(i, j + 1)] = (i, j)
    start = min(nxt)
    loop = [start]
    p = nxt[start]
    while p != start:
        loop.append(p)
        p = nxt[p]
    if len(loop) != len(nxt):
        raise AssertionError("polyomino outline is not a single cycle")
    return simplify(loop)
