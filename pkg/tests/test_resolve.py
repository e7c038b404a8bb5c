import random
from fractions import Fraction

import pytest

from conftest import S
from surfres.acceptance import random_gwt_quadrant, random_prepared, random_quadrant, random_wt
from surfres.algebra import as_surface, order, parse_poly
from surfres.errors import MissingDirectionError, StepLimitExceeded
from surfres.newton import hironaka_polygon, polygon_metrics
from surfres.prepare import is_prepared
from surfres.resolve import (
    DROPPED,
    SMOOTH,
    STEP_LIMIT,
    Strategy,
    critical_directions,
    normalize,
    resolve_trace,
    step,
    worst_branch,
    worst_case_depth,
)
from surfres.transform import Direction, StepKind, quadratic

D = Direction.of
P = parse_poly


# -- single steps -------------------------------------------------------------


def test_step_prefers_permissible_curves():
    st = step(S("Z^2-X^3"))
    assert st.kind == StepKind.monoidal("ZX") and st.after_poly == P("Z^2-X")
    assert st.after_order == 1 and st.dropped and st.delta_snapshot is None
    for n in (2, 3):
        st = step(S(f"Z^{n}+X^{2 * n - 1}*Y^{2 * n - 1}"))
        assert st.kind == StepKind.monoidal("ZX")


def test_step_uses_zy_when_only_it_is_permissible():
    assert step(S("Z^2+Y^3")).kind == StepKind.monoidal("ZY")


def test_step_quadratic_needs_direction():
    s = S("Z^3+X^2*Z+Y^3-X^4")
    with pytest.raises(MissingDirectionError):
        step(s)
    st = step(s, D(1, 0, 0))
    assert st.kind == StepKind.quadratic(D(1, 0, 0))
    assert st.after_poly == quadratic(s, D(1, 0, 0))


def test_step_rejects_smooth_input():
    with pytest.raises(ValueError):
        step(S("Z+X^2"))


# -- critical directions ------------------------------------------------------


def test_critical_direction_examples():
    dl = critical_directions(S("Z^2+X^2+Y^4"))
    assert [d for d in dl if d != dl.generic] == [D(0, 1, 0)]
    assert order(quadratic(S("Z^2+X^2+Y^4"), dl.generic)) < 2

    for n in (3, 4, 5):
        s = S(f"Z^{n}+X^{n - 1}*Y^{n - 1}")
        dl = critical_directions(s)
        assert dl == [D(0, 1, 0), D(1, 0, 0), D(1, 1, 0)]
        assert dl.generic == D(1, 1, 0)
        assert order(quadratic(s, dl.generic)) < n

    assert critical_directions(S("Z^2+X^3")) == [D(0, 1, 0), D(1, 0, 0)]


def test_irrational_directions_are_flagged():
    dl = critical_directions(S("Z^2+X^2*(Y^2-2*X^2)"))
    assert dl.warnings and dl.generic == D(1, 0, 0)
    assert not critical_directions(S("Z^2+X^3")).warnings


def _persisting(s, span=3):
    """Brute force over a box of directions, the oracle for completeness."""
    found = set()
    rng = range(-span, span + 1)
    for b in rng:
        for c in rng:
            for d in (D(1, b, c), D(0, 1, c)):
                if order(quadratic(s, d)) >= s.n:
                    found.add(d)
    return found


@pytest.mark.parametrize("seed", range(4))
def test_critical_directions_are_complete(seed):
    rng = random.Random(seed)
    for _ in range(15):
        s = random_wt(rng, max_degree=7)
        dl = critical_directions(s)
        unlisted = _persisting(s) - set(dl)
        if unlisted:
            # a whole line of n-fold points: the representative stands for it
            want = worst_case_depth(normalize(quadratic(s, dl.generic)))
            for d in unlisted:
                assert d.a == 1 and d.c == 0
                assert worst_case_depth(normalize(quadratic(s, d))) == want
        for d in dl:
            if d != dl.generic:
                assert order(quadratic(s, d)) >= s.n


def test_critical_directions_non_plane_cone():
    s = S("Z^2+X^2+Y^4")
    assert _persisting(s) <= set(critical_directions(s))
    s = S("Z^3+X^3+Y^3")
    assert _persisting(s) == set() and critical_directions(s) == [D(1, 0, 0)]


# -- traces -------------------------------------------------------------------


def test_trace_examples():
    t = resolve_trace(S("Z^2+X^2+Y^4"), Strategy.given([D(0, 1, 0), D(0, 1, 0)]))
    assert t.outcome == DROPPED and t.depth == 2
    assert [st.dropped for st in t.steps] == [False, True]

    t = resolve_trace(S("Z^5+X^2*Y*Z^3+X^3*Y^3"), Strategy.given([D(1, 1, 0)]))
    assert t.outcome == DROPPED and t.depth == 1 and t.steps[0].after_order <= 1

    for strat in (Strategy.generic(), Strategy.worst(), Strategy.given([])):
        t = resolve_trace(S("Z^2-X^3"), strat)
        assert t.outcome == DROPPED and t.depth == 1


def test_trace_smooth_input():
    t = resolve_trace(S("Z+X*Y"), Strategy.generic())
    assert t.outcome == SMOOTH and t.depth == 0


def test_trace_runs_out_of_directions():
    with pytest.raises(MissingDirectionError):
        resolve_trace(S("Z^2+X^2+Y^4"), Strategy.given([D(0, 1, 0)]))


def test_trace_step_limit():
    t = resolve_trace(S("Z^2+X^2+Y^8"), Strategy.worst(), max_steps=2)
    assert t.outcome == STEP_LIMIT and t.depth == 2
    with pytest.raises(ValueError):
        resolve_trace(S("Z^2+X^3"), Strategy.generic(), max_steps=0)


def test_strategy_parse():
    assert Strategy.parse("generic") == Strategy.generic()
    assert Strategy.parse("worst") == Strategy.worst()
    assert Strategy.parse("dirs=0:1:0,1:2:0") == Strategy.given([D(0, 1, 0), D(1, 2, 0)])
    with pytest.raises(ValueError):
        Strategy.parse("random")


def test_trace_invariants():
    rng = random.Random(23)
    for _ in range(40):
        s = random_wt(rng)
        t = resolve_trace(s, Strategy.generic())
        assert t.outcome == DROPPED
        assert all(not st.dropped for st in t.steps[:-1]) and t.steps[-1].dropped
        for st in t.steps:
            assert st.after_order <= st.before_n
            assert (st.delta_snapshot is None) == st.dropped


def test_quadrant_start_stays_quadrant():
    rng = random.Random(29)
    for _ in range(40):
        s, _ = random_quadrant(rng)
        for strat in (Strategy.generic(), Strategy.worst()):
            for st in resolve_trace(s, strat).steps:
                if not st.dropped:
                    assert polygon_metrics(st.delta_snapshot).is_quadrant


def test_prepared_start_stays_prepared_and_shrinks():
    rng = random.Random(31)
    for _ in range(30):
        s = random_prepared(rng)
        assert is_prepared(s)
        prev = polygon_metrics(hironaka_polygon(s))
        for st in resolve_trace(s, Strategy.worst()).steps:
            if st.dropped:
                break
            assert is_prepared(st.surface)
            if st.surface.plane_cone:
                cur = polygon_metrics(st.delta_snapshot)
                before, after = prev.R.x + prev.L.y, cur.R.x + cur.L.y
                if st.kind.kind == StepKind.QUADRATIC:
                    assert after <= before - Fraction(1, s.n)
                else:
                    assert after <= before
                prev = cur


def test_gwt_quadrant_generic_uses_zx_only():
    rng = random.Random(37)
    for _ in range(30):
        s, L1 = random_gwt_quadrant(rng)
        t = resolve_trace(s, Strategy.generic())
        assert all(st.kind == StepKind.monoidal("ZX") for st in t.steps)
        assert t.depth == int(L1)


# -- worst-case search --------------------------------------------------------


@pytest.mark.parametrize("r", [2, 3, 4])
def test_worst_depth_non_plane_family(r):
    assert worst_case_depth(S(f"Z^2+X^2+Y^{2 * r}")) == r


@pytest.mark.parametrize("n", [3, 4, 5])
def test_worst_depth_prepared_family(n):
    depth, kinds = worst_branch(S(f"Z^{n}+X^{n - 1}*Y^{n - 1}"))
    assert depth == n - 1
    assert list(kinds[:-1]) == [StepKind.quadratic(D(0, 1, 0))] * (n - 2)


@pytest.mark.parametrize("n", [2, 3])
def test_worst_depth_quadrant_family(n):
    assert worst_case_depth(S(f"Z^{n}+X^{2 * n - 1}*Y^{2 * n - 1}")) == n + 1


def test_worst_depth_matches_replayed_trace():
    rng = random.Random(41)
    for _ in range(20):
        s = random_wt(rng, max_degree=8)
        depth = worst_case_depth(s)
        t = resolve_trace(s, Strategy.worst())
        assert t.depth == depth and t.outcome == DROPPED
        assert resolve_trace(s, Strategy.generic()).depth <= depth


def test_worst_depth_step_limit():
    with pytest.raises(StepLimitExceeded) as exc:
        worst_case_depth(S("Z^2+X^2+Y^12"), max_steps=3)
    assert len(exc.value.prefix) == 4
    with pytest.raises(ValueError):
        worst_case_depth(S("Z^2+X^3"), max_steps=0)


def test_worst_depth_normalizes_non_wt_input():
    s = as_surface(P("Z^2+2*X*Z+X^2+X^3"))  # (Z+X)^2 + X^3
    assert worst_case_depth(s) == worst_case_depth(S("Z^2+X^3"))
