from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rguard.generators import comb, random_domain, sharpness
from rguard.mobile_guards import guard_segments, solve_mhsc, solve_mvsc, verify_certificate, verify_mobile_cover
from rguard.oracle import exact_mobile
from rguard.pixelation import pixelate
from rguard.slicing import Orientation

H, V = Orientation.H, Orientation.V


def test_square(square):
    g = pixelate(square)
    sol = solve_mhsc(g)
    assert sol.guards == (0,) and sol.witness == (0,) and sol.size == 1
    assert solve_mvsc(g).size == 1


@pytest.mark.parametrize("k", [1, 2, 4, 10, 50])
def test_comb_sizes(k):
    g = pixelate(comb(k))
    assert solve_mhsc(g).size == 1
    assert solve_mvsc(g).size == k


def test_l_domain(l_domain):
    g = pixelate(l_domain)
    assert solve_mhsc(g).guards == (0,)
    assert solve_mvsc(g).guards == (0,)


def test_notched_square_needs_two_each_way():
    g = pixelate(sharpness(4))
    assert (solve_mhsc(g).size, solve_mvsc(g).size) == (2, 2)


def test_verify_cover_examples(square):
    g = pixelate(comb(3))
    spine = max(range(g.n_h), key=lambda h: len(g.neighbors_of_h(h)))
    tooth = next(h for h in range(g.n_h) if h != spine)
    assert verify_mobile_cover(g, [spine], H)
    assert not verify_mobile_cover(g, [tooth], H)
    assert not verify_mobile_cover(pixelate(square), [], H)


def test_guard_segments_are_midlines(l_domain):
    g = pixelate(l_domain)
    assert guard_segments(g, solve_mhsc(g)) == [(0, 1, 4, 1)]
    assert guard_segments(g, solve_mvsc(g)) == [(1, 0, 1, 4)]
    seg = guard_segments(pixelate(comb(2)), solve_mhsc(pixelate(comb(2))))[0]
    assert seg[1] == seg[3] == Fraction(1, 2)


def test_debug_mode_runs_the_apex_check():
    g = pixelate(random_domain(30, 11))
    assert solve_mhsc(g, debug=True).size == solve_mhsc(g).size


# ---------------------------------------------------------------- properties

@settings(max_examples=80, deadline=None)
@given(st.integers(2, 15), st.integers(0, 100_000))
def test_exact_and_certified(half, seed):
    g = pixelate(random_domain(2 * half, seed))
    for o, solve in ((H, solve_mhsc), (V, solve_mvsc)):
        sol = solve(g)
        assert verify_mobile_cover(g, sol.guards, o)
        assert verify_certificate(g, sol)
        assert sol.size <= (g.n_h if o is H else g.n_v)
        if g.n_h + g.n_v <= 24:
            assert sol.size == exact_mobile(g, o).optimum


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12), st.integers(0, 100_000))
def test_size_does_not_depend_on_root(half, seed):
    g = pixelate(random_domain(2 * half, seed))
    sizes = {solve_mhsc(g, root=r, debug=True).size for r in range(g.n_h)}
    assert len(sizes) == 1
    sizes = {solve_mvsc(g, root=r, debug=True).size for r in range(g.n_v)}
    assert len(sizes) == 1
