import pytest

from tilecraft.balanced import (DoesNotFit, NotConvex, NotLowComplexityWarning,
                                Stripe, balanced_search, edge, fits,
                                is_balanced, is_convex, stripe_scenario_check)
from tilecraft.grid import (DiscreteDomain, Vec2, WindowConfig, ZeroVector,
                            patterns_of)


def W(w, h, origin=Vec2(0, 0)):
    return DiscreteDomain.rect(w, h, origin)


# --- edge --------------------------------------------------------------------

def test_edge_rect_right():
    d = DiscreteDomain.rect(3, 2, Vec2(1, 1))
    assert edge(d, Vec2(1, 0)).cells == (Vec2(3, 1), Vec2(3, 2))


def test_edge_rect_down():
    d = DiscreteDomain.rect(3, 2, Vec2(1, 1))
    assert edge(d, Vec2(0, -1)).cells == (Vec2(1, 1), Vec2(2, 1), Vec2(3, 1))


def test_edge_triangle_diagonal():
    d = DiscreteDomain([(0, 0), (1, 0), (0, 1)])
    assert set(edge(d, Vec2(1, 1)).cells) == {Vec2(1, 0), Vec2(0, 1)}


def test_edge_zero_vector():
    with pytest.raises(ZeroVector):
        edge(DiscreteDomain.rect(2, 2), Vec2(0, 0))


def test_edge_subset_single_line():
    d = DiscreteDomain([(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)])
    for u in (Vec2(1, 0), Vec2(1, 1), Vec2(-1, 2)):
        e = edge(d, u)
        assert set(e.cells) <= set(d.cells)
        levels = {c.dot(u) for c in e.cells}
        assert len(levels) == 1


# --- is_convex -----------------------------------------------------------------

def test_convex_rectangles():
    for w, h in ((1, 1), (2, 3), (4, 4)):
        assert is_convex(DiscreteDomain.rect(w, h))


def test_convex_collinear_gap():
    assert not is_convex(DiscreteDomain([(0, 0), (2, 0)]))
    assert is_convex(DiscreteDomain([(0, 0), (1, 0), (2, 0)]))


def test_convex_triangle():
    assert is_convex(DiscreteDomain([(0, 0), (1, 0), (0, 1)]))


def test_convex_missing_interior():
    ring = [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)]
    assert not is_convex(DiscreteDomain(ring))


def test_convex_needs_more_than_segment_closure():
    # every segment between vertices carries no further lattice points,
    # yet the hull contains (1, 1): segment closure alone is not convexity
    tri = DiscreteDomain([(0, 0), (2, 1), (1, 2)])
    assert not is_convex(tri)
    assert is_convex(DiscreteDomain([(0, 0), (2, 1), (1, 2), (1, 1)]))


def test_convex_translation_invariant():
    d = DiscreteDomain([(0, 0), (1, 0), (0, 1)])
    bad = DiscreteDomain([(0, 0), (2, 1), (4, 2), (0, 1)])
    for t in (Vec2(3, -2), Vec2(-1, 5)):
        assert is_convex(d.translate(t)) == is_convex(d)
        assert is_convex(bad.translate(t)) == is_convex(bad)


def test_convex_cuts_contiguous():
    shapes = [DiscreteDomain.rect(3, 2),
              DiscreteDomain([(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)]),
              DiscreteDomain([(0, 0), (1, 0), (0, 1)])]
    for d in shapes:
        assert is_convex(d)
        for u in (Vec2(0, 1), Vec2(1, 0)):
            levels = {}
            for c in d.cells:
                levels.setdefault(c.dot(u), []).append(c)
            for cells in levels.values():
                xs = sorted(c.dot(u.perp()) for c in cells)
                assert xs == list(range(xs[0], xs[0] + len(xs)))


# --- fits ------------------------------------------------------------------------

def test_fits_rect_in_rect():
    assert fits(DiscreteDomain.rect(2, 2), DiscreteDomain.rect(3, 3)) == Vec2(0, 0)


def test_fits_stripe():
    window = W(8, 8, Vec2(-4, -4))
    t = fits(DiscreteDomain.rect(2, 2), Stripe(Vec2(0, 1), 3), window)
    assert t is not None
    # both rows inside the band -3 < y <= 0
    for cell in DiscreteDomain.rect(2, 2).translate(t).cells:
        assert -3 < cell.y <= 0


def test_fits_stripe_too_narrow():
    window = W(8, 8, Vec2(-4, -4))
    assert fits(DiscreteDomain.rect(2, 2), Stripe(Vec2(0, 1), 1), window) is None


# --- is_balanced -------------------------------------------------------------------

def test_balanced_constant(constant_zero):
    rep = is_balanced(constant_zero, DiscreteDomain.rect(2, 2), Vec2(0, 1),
                      W(10, 10))
    assert rep.counts == (1, 1, 2)
    assert rep.min_line_count == 2
    assert rep.balanced


def test_balanced_checkerboard(checkerboard):
    rep = is_balanced(checkerboard, DiscreteDomain.rect(2, 2), Vec2(0, 1),
                      W(10, 10))
    assert rep.counts == (2, 2, 2)
    assert rep.balanced


def test_balanced_five_pattern_window_fails(five_pattern_window):
    rep = is_balanced(five_pattern_window, DiscreteDomain.rect(2, 2),
                      Vec2(0, 1), five_pattern_window.domain())
    assert rep.pattern_count == 5
    assert not rep.cond_low_complexity
    assert not rep.balanced


def test_balanced_rejects_nonconvex(constant_zero):
    with pytest.raises(NotConvex):
        is_balanced(constant_zero, DiscreteDomain([(0, 0), (2, 0)]),
                    Vec2(0, 1), W(8, 8))


def test_balanced_counts_shared_with_patterns_of(checkerboard):
    d = DiscreteDomain.rect(2, 2)
    rep = is_balanced(checkerboard, d, Vec2(0, 1), W(10, 10))
    assert rep.pattern_count == len(patterns_of(checkerboard, d, W(10, 10)))
    inner = d.minus(rep.edge_cells)
    assert rep.inner_pattern_count == len(
        patterns_of(checkerboard, inner, W(10, 10)))


# --- balanced_search ----------------------------------------------------------------

def test_search_constant_singleton(constant_zero):
    res = balanced_search(constant_zero, 2, 2, Vec2(0, 1), W(10, 10))
    assert res is not None
    assert len(res.domain) == 1
    assert res.report.counts == (1, 1, 1)


def test_search_checkerboard(checkerboard):
    res = balanced_search(checkerboard, 2, 2, Vec2(1, 0), W(10, 10))
    assert res is not None
    revalidated = is_balanced(checkerboard, res.domain, res.orientation,
                              W(10, 10))
    assert revalidated.balanced


def test_search_five_pattern_warns(five_pattern_window):
    # with the budget exhausted at singletons (two colors present, so
    # condition (i) fails) the search reports NotFound and warns
    with pytest.warns(NotLowComplexityWarning):
        res = balanced_search(five_pattern_window, 2, 2, Vec2(0, 1),
                              five_pattern_window.domain(), area_budget=1)
    assert res is None


# --- stripe_scenario_check -----------------------------------------------------------

def make_stripe_pair():
    # vertical stripes on columns -4..3; the edge column of the width-3
    # band (x = 0) is altered in the second coloring
    rows_d = [[(x % 2) for x in range(-4, 4)] for _ in range(6)]
    rows_e = [list(row) for row in rows_d]
    for row in rows_e:
        row[4] ^= 1  # column x = 0
    origin = Vec2(-4, 0)
    return (WindowConfig.from_rows(rows_d, origin),
            WindowConfig.from_rows(rows_e, origin))


def test_stripe_hypotheses_fail_when_equal():
    d, _ = make_stripe_pair()
    window = DiscreteDomain.rect(8, 6, Vec2(-4, 0))
    rep = stripe_scenario_check(d, d, DiscreteDomain.rect(2, 2), Vec2(1, 0),
                                3, window)
    assert not rep.hypotheses_hold
    assert rep.corroborated is None


def test_stripe_scenario_corroborates():
    d, e = make_stripe_pair()
    window = DiscreteDomain.rect(8, 6, Vec2(-4, 0))
    rep = stripe_scenario_check(d, e, DiscreteDomain.rect(2, 2), Vec2(1, 0),
                                3, window, period_bound=2)
    assert rep.hypotheses_hold
    assert Vec2(0, 1) in rep.perpendicular_periods
    assert rep.corroborated


def test_stripe_does_not_fit():
    d, e = make_stripe_pair()
    window = DiscreteDomain.rect(8, 6, Vec2(-4, 0))
    with pytest.raises(DoesNotFit):
        stripe_scenario_check(d, e, DiscreteDomain.rect(2, 2), Vec2(1, 0),
                              1, window)
