import logging

import pytest

from rguard.generators import _block, _trace, random_domain
from rguard.geometry import AxisRect, domain_from_coords

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]
L_DOMAIN = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
# 20-vertex domain whose pixelation graph matches a reference 25-edge graph
GALLERY = [(0, 0), (0, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 4), (8, 4), (8, 2), (9, 2), (9, 0),
        (7, 0), (7, 1), (5, 1), (5, 0), (2, 0), (2, 2), (1, 2), (1, 0)]
GALLERY_EDGES = [(0, 1), (1, 3), (1, 4), (1, 5), (4, 1), (4, 2), (3, 3), (4, 3), (5, 3), (3, 4), (4, 4), (5, 4),
              (6, 4), (3, 5), (4, 5), (5, 5), (3, 6), (4, 6), (5, 6), (2, 7), (3, 7), (4, 7), (5, 7), (2, 8),
              (3, 8)]   # (h, v) pairs in the reference labelling


def corpus_case(s: int):
    return random_domain(4 + 2 * (s % 12), s)


def _r(a, b, c, d) -> AxisRect:
    return AxisRect(int(2 * a), int(2 * b), int(2 * c), int(2 * d))


# a 2-connected guard block with two split slices (h3 and v5)
SPLIT_H = {1: _r(3, 0, 13, 1), 2: _r(1, 3, 13, 4), 3: _r(1, 5, 15, 7), 4: _r(1, 9, 7, 10), 5: _r(11, 9, 15, 10)}
SPLIT_V = {1: _r(1, 3, 2, 10), 2: _r(3, 0, 4, 10), 3: _r(5, 0, 7, 10), 4: _r(8.5, 0, 9.5, 7),
          5: _r(11, 0, 13, 10), 6: _r(14, 5, 15, 10)}

# two rings joined by a corridor; with these guards the block has an all-reflex neck
NECK_CELLS = ((_block(-3, 0, 8, 4) - _block(1, 3, 4, 4)) | _block(0, -2, 5, 0)
              | (_block(-3, -6, 8, -2) - _block(1, -6, 4, -5)))
NECK_MH = [0, 1, 2, 4, 5, 6]
NECK_MV = [0, 1, 2, 4, 5, 6]


@pytest.fixture
def square():
    return domain_from_coords(SQUARE)


@pytest.fixture
def l_domain():
    return domain_from_coords(L_DOMAIN)


@pytest.fixture
def gallery():
    return domain_from_coords(GALLERY)


@pytest.fixture
def split_block():
    from rguard.point_guards import refine_rects
    edges = [(h, v) for h in SPLIT_H for v in SPLIT_V if SPLIT_H[h].interiors_meet(SPLIT_V[v])]
    return refine_rects(SPLIT_H, SPLIT_V, edges)


@pytest.fixture
def neck_domain():
    return domain_from_coords(_trace(NECK_CELLS))


@pytest.fixture(autouse=True)
def _quiet_logs(caplog):
    caplog.set_level(logging.ERROR, logger="rguard")
