from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import S
from surfres.errors import EmptyPolygonError
from surfres.newton import (
    Staircase,
    cloud,
    hironaka_polygon,
    level_polygon,
    point,
    polygon_metrics,
    rho,
    staircase_hull,
)

F = Fraction


def _in_region(p, pts):
    """Exact membership of ``p`` in conv(pts) + quadrant: p dominates a
    point of some segment between two input points."""
    for a in pts:
        for b in pts:
            lo, hi = F(0), F(1)
            for c in (0, 1):
                # t*a_c + (1-t)*b_c <= p_c, linear in t
                slope, const = a[c] - b[c], b[c] - p[c]
                if slope == 0:
                    if const > 0:
                        lo, hi = F(1), F(0)
                elif slope > 0:
                    hi = min(hi, -const / slope)
                else:
                    lo = max(lo, -const / slope)
            if lo <= hi:
                return True
    return False


def hull_oracle(pts):
    """Vertices by definition: points not in the region spanned by the
    others (duplicates kept once)."""
    uniq = sorted(set(pts))
    verts = [p for p in uniq if not _in_region(p, [q for q in uniq if q != p])]
    return tuple(point(*p) for p in sorted(verts))


rationals = st.fractions(min_value=0, max_value=6, max_denominator=4)
point_sets = st.lists(st.tuples(rationals, rationals), max_size=9)


@given(point_sets)
def test_hull_matches_definition(pts):
    assert staircase_hull(pts).vertices == hull_oracle(pts)


@given(point_sets)
def test_hull_invariants(pts):
    st_ = staircase_hull(pts)
    vs = st_.vertices
    assert all(a.x < b.x and a.y > b.y for a, b in zip(vs, vs[1:]))
    assert staircase_hull(vs) == st_
    for p in pts:
        assert st_.contains(p)


def test_hull_examples():
    assert staircase_hull([(1, 2), (2, 1), (3, 3)]).vertices == (point(1, 2), point(2, 1))
    assert staircase_hull([]).vertices == ()
    st_ = staircase_hull([(0, 1), (1, 0), (F(4, 3), 0)])
    assert st_.vertices == (point(0, 1), point(1, 0))
    assert st_.on_boundary((F(4, 3), 0))
    assert not st_.on_boundary((2, 2))


def test_collinear_point_is_not_a_vertex():
    assert staircase_hull([(0, 2), (1, 1), (2, 0)]).vertices == (point(0, 2), point(2, 0))


def test_cloud():
    assert cloud(S("Z^5+X^2*Y*Z^3+X^3*Y^3")) == {(0, 0, 5), (2, 1, 3), (3, 3, 0)}
    assert cloud(S("Z^4")) == {(0, 0, 4)}
    assert cloud(S("Z^3+X^2*Z+Y^3-X^4")) == {(0, 0, 3), (2, 0, 1), (0, 3, 0), (4, 0, 0)}


def test_level_polygons():
    s = S("Z^3+X^2*Z+Y^3-X^4")
    assert level_polygon(s, 0).vertices == (point(0, 3), point(4, 0))
    assert level_polygon(s, 1).vertices == (point(2, 0),)
    assert level_polygon(s, 2).is_empty()
    with pytest.raises(ValueError):
        level_polygon(s, 3)


def test_rho():
    assert rho((3, 3, 0), 5) == point(F(3, 5), F(3, 5))
    assert rho((2, 1, 3), 5) == point(1, F(1, 2))
    assert rho((4, 7, 0), 1) == point(4, 7)
    with pytest.raises(ValueError):
        rho((0, 0, 5), 5)


def test_hironaka_polygons():
    assert hironaka_polygon(S("Z^3+X^2*Z+Y^3-X^4")).vertices == (point(0, 1), point(1, 0))
    assert hironaka_polygon(S("Z^5+X^2*Y*Z^3+X^3*Y^3")).vertices == (
        point(F(3, 5), F(3, 5)),
        point(1, F(1, 2)),
    )
    for n in (3, 4, 5):
        st_ = hironaka_polygon(S(f"Z^{n}+X^{n - 1}*Y^{n - 1}"))
        assert st_.vertices == (point(F(n - 1, n), F(n - 1, n)),)


def test_metrics_single_facet():
    m = polygon_metrics(Staircase((point(F(3, 5), F(3, 5)), point(1, F(1, 2)))))
    assert [f.slope for f in m.facets] == [F(-1, 4)]
    assert not m.is_quadrant and not m.has_drop_point
    assert m.dLR_squared == F(4, 25) + F(1, 100)
    assert m.facets[0].squared_length == m.dLR_squared


def test_metrics_drop_point():
    m = polygon_metrics(Staircase((point(F(1, 2), 0),)))
    assert m.is_quadrant and m.has_drop_point and m.facets == ()


def test_metrics_two_facets():
    st_ = staircase_hull([(0, 2), (F(1, 2), F(3, 2)), (F(3, 2), 1)])
    m = polygon_metrics(st_)
    assert [f.slope for f in m.facets] == [-1, F(-1, 2)]
    assert [f.cotan for f in m.facets] == [-1, -2]


def test_metrics_empty():
    m = polygon_metrics(Staircase())
    assert m.is_quadrant and m.L is None and m.facets == ()
    with pytest.raises(EmptyPolygonError):
        m.leftmost()
    with pytest.raises(EmptyPolygonError):
        m.rightmost()


@given(point_sets)
def test_quadrant_iff_single_vertex(pts):
    m = polygon_metrics(staircase_hull(pts))
    if pts:
        assert m.is_quadrant == (m.L == m.R) == (not m.facets)
        assert m.has_drop_point == any(v.x + v.y < 1 for v in staircase_hull(pts).vertices)


def test_weierstrass_surface_has_no_drop_point():
    for text in ["Z^3+X^2*Z+Y^3-X^4", "Z^2+X^2+Y^4", "Z^5+X^2*Y*Z^3+X^3*Y^3"]:
        assert not polygon_metrics(hironaka_polygon(S(text))).has_drop_point


def test_vertex_denominators_divide_some_height():
    s = S("Z^4+X^2*Y^3*Z+X^5*Z^2+Y^7")
    for v in hironaka_polygon(s).vertices:
        assert any(d % v.x.denominator == 0 and d % v.y.denominator == 0 for d in range(1, 5))
