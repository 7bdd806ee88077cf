"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the lines
inline; they are also echoed past capture into the terminal).
"""

import gc
import time
from functools import cache

import networkx as nx
import pytest

from conftest import SPLIT_H, SPLIT_V, NECK_MH, NECK_MV, corpus_case
from rguard.generators import _trace, comb, sharpness
from rguard.geometry import domain_from_coords
from rguard.mobile_guards import solve_mhsc, solve_mvsc, verify_certificate
from rguard.oracle import exact_mobile, exact_point
from rguard.pixelation import adjacency_of, centroid_vision_agrees, check_chordal_bipartite, pixelate
from rguard.point_guards import (assemble, blocks, build_M, components, construct_hyperguard, point_bound,
                                 refine_rects, solve_point_guards, split_refine, uncovered_edges)
from rguard.slicing import Orientation

H, V = Orientation.H, Orientation.V
CORPUS = range(500)


@cache
def corpus():
    out = []
    for s in CORPUS:
        d = corpus_case(s)
        assert d.n <= 30
        out.append((d, pixelate(d)))
    return out


@cache
def mobile(s):
    g = corpus()[s][1]
    return solve_mhsc(g), solve_mvsc(g)


@pytest.fixture
def verdict(capsys):
    def say(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        assert ok, detail
    return say


def test_criterion_1_comb_fidelity(verdict):
    t0 = time.perf_counter()
    g = pixelate(comb(10))
    m_h, m_v = solve_mhsc(g).size, solve_mvsc(g).size
    sol = solve_point_guards(g)
    p4 = exact_point(pixelate(comb(4))).optimum
    dt = time.perf_counter() - t0
    ok = (m_h, m_v, sol.method, sol.size, p4) == (1, 10, "star", 10, 4) and dt < 1
    verdict("1 comb fidelity", ok, f"m_H={m_h} m_V={m_v} p={sol.size} ({sol.method}) exact comb(4)={p4} {dt:.2f}s")


def test_criterion_2_sharpness_pairs(verdict):
    t0 = time.perf_counter()
    got = []
    for total, p in [(2, 1), (3, 2), (4, 4), (5, 5), (6, 6)]:
        g = pixelate(sharpness(total))
        got.append((solve_mhsc(g).size + solve_mvsc(g).size, exact_point(g, cap=None).optimum))
    g = pixelate(sharpness(13))
    mm = solve_mhsc(g).size + solve_mvsc(g).size
    sol = solve_point_guards(g)
    covered = not uncovered_edges(g, sol.guards)
    dt = time.perf_counter() - t0
    ok = (got == [(2, 1), (3, 2), (4, 4), (5, 5), (6, 6)] and (mm, sol.size) == (13, 16)
          and sol.size == 4 * 12 // 3 and covered and dt < 60)
    verdict("2 sharpness pairs", ok, f"{got} + ({mm},{sol.size}) covered={covered} {dt:.1f}s")


def test_criterion_3_mobile_exactness(verdict):
    t0 = time.perf_counter()
    bad = []
    for s, (_, g) in enumerate(corpus()):
        for o, sol in zip((H, V), mobile(s)):
            if sol.size != exact_mobile(g, o).optimum or not verify_certificate(g, sol):
                bad.append((s, o.value))
    dt = time.perf_counter() - t0
    verdict("3 mobile guard exactness", not bad and dt < 300,
            f"{len(corpus())} domains, {len(bad)} mismatches {bad[:5]}, {dt:.1f}s")


def test_criterion_4_point_bound_inequality(verdict):
    bad = []
    for s, (_, g) in enumerate(corpus()):
        m_h, m_v = (x.size for x in mobile(s))
        p = exact_point(g, cap=None).optimum
        if not max(m_h, m_v) <= p <= point_bound(m_h, m_v):
            bad.append((s, m_h, m_v, p))
    verdict("4 max(m_H,m_V) <= p <= floor(4(m_H+m_V-1)/3)", not bad, f"{len(bad)} violations {bad[:5]}")


def test_criterion_5_constructed_guards(verdict):
    bad = []
    cases = [g for _, g in corpus()] + [pixelate(comb(k)) for k in range(1, 51)]
    for i, g in enumerate(cases):
        sol = solve_point_guards(g, check=False)
        if uncovered_edges(g, sol.guards) or sol.size > sol.bound:
            bad.append((i, sol.size, sol.bound))
    verdict("5 constructed guards cover and meet the bound", not bad,
            f"{len(cases)} instances, {len(bad)} failures {bad[:5]}")


def test_criterion_6_structural_checks(verdict):
    bad = []
    checked = 0
    for s, (d, g) in enumerate(corpus()):
        for v in range(g.n_v):
            nb = g.neighbors_of_v(v)
            if not all(b in g.t_h.adjacency[a] for a, b in zip(nb, nb[1:])):
                bad.append((s, "path", v))
        for h in range(g.n_h):
            nb = g.neighbors_of_h(h)
            if not all(b in g.t_v.adjacency[a] for a, b in zip(nb, nb[1:])):
                bad.append((s, "path", h))
        if g.m > 64:
            continue
        checked += 1
        if not check_chordal_bipartite(adjacency_of(g)):
            bad.append((s, "chordal"))
        edges = sorted(g.edges())
        if not all(centroid_vision_agrees(d, g, e1, e2) for e1 in edges for e2 in edges):
            bad.append((s, "vision"))
    verdict("6 structural checks", not bad, f"{checked} instances with |E| <= 64, {len(bad)} failures {bad[:5]}")


def _corpus_blocks():
    for s, (_, g) in enumerate(corpus()):
        h, v = mobile(s)
        m = build_M(g, h.guards, v.guards)
        if m.is_star():
            continue
        for comp in components(m):
            for b in blocks(comp):
                if len(b.edges) > 1:
                    yield f"corpus {s}", split_refine(g, b)


def test_criterion_7_hyperguard_ledger(verdict):
    edges = [(h, v) for h in SPLIT_H for v in SPLIT_V if SPLIT_H[h].interiors_meet(SPLIT_V[v])]
    cases = list(_corpus_blocks()) + [("split_block", refine_rects(SPLIT_H, SPLIT_V, edges))]
    for total in (4, 7, 13):
        g = pixelate(sharpness(total))
        m = build_M(g, solve_mhsc(g).guards, solve_mvsc(g).guards)
        cases += [(f"sharpness {total}", split_refine(g, b)) for b in blocks(m) if len(b.edges) > 1]
    bad = []
    for name, mp in cases:
        res = construct_hyperguard(mp)
        if not all(res.identities.values()):
            bad.append((name, "identity"))
        if not res.ledger_ok:
            bad.append((name, "ledger"))
    verdict("7 hyperguard identities and weight ledger", not bad,
            f"{len(cases)} blocks, {len(bad)} failures {bad[:5]}")


def test_criterion_7_note_neck_fixture(capsys):
    # Outside the corpus: a hand-built block whose neck raises the ledger.
    # Reported for visibility; see the decisions ledger for the analysis.
    from conftest import NECK_CELLS
    g = pixelate(domain_from_coords(_trace(NECK_CELLS)))
    m = build_M(g, NECK_MH, NECK_MV)
    (b,) = [b for b in blocks(m) if len(b.edges) > 1]
    res = construct_hyperguard(split_refine(g, b))
    sol = assemble(g, NECK_MH, NECK_MV)
    with capsys.disabled():
        print(f"\n[NOTE] 7 neck fixture: ledger monotone={res.ledger_ok} "
              f"identities={all(res.identities.values())} guards {sol.size} <= {sol.bound}")
    assert all(res.identities.values()) and sol.size <= sol.bound


def _solve_time(k, reps=3):
    best = float("inf")
    for _ in range(reps):
        d = comb(k)
        gc.collect()
        t0 = time.perf_counter()
        g = pixelate(d)
        solve_mhsc(g)
        solve_mvsc(g)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_8_near_linear_scaling(verdict):
    t0 = time.perf_counter()
    t3, t4 = _solve_time(1_000), _solve_time(10_000)
    t5 = _solve_time(100_000, reps=2)
    total = time.perf_counter() - t0
    r1, r2 = t4 / t3, t5 / t4
    verdict("8 near-linear scaling", r1 <= 15 and r2 <= 15 and total < 120,
            f"t(1e3)={t3:.3f}s t(1e4)={t4:.3f}s t(1e5)={t5:.2f}s ratios {r1:.1f}, {r2:.1f}; {total:.0f}s")


def test_corpus_is_connected_and_small():
    for d, g in corpus():
        graph = nx.Graph((("h", h), ("v", v)) for h, v in g.edges())
        assert nx.is_connected(graph) and d.n <= 30
