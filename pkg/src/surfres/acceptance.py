"""The verification corpus: fixed worked examples plus seeded randomized
property checks.  Each criterion returns ``(ok, detail)``; ``run_all`` feeds
both the test suite and ``surfres verify``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import (
    TriPoly,
    X,
    Y,
    Z,
    as_surface,
    initial_form,
    is_x_regular,
    levels_of,
    order,
    parse_poly,
    substitute,
)
from .bounds import (
    bound_gwt_quadrant,
    bound_nonplane,
    bound_prepared,
    bound_quadrant,
    bound_report,
)
from .newton import (
    delta_from_poly,
    hironaka_polygon,
    level_polygon_of,
    point,
    polygon_metrics,
    rho,
)
from .prepare import detect_generalized_quadrant, is_prepared
from .resolve import worst_branch
from .transform import (
    Direction,
    StepKind,
    Transvection,
    apply_transvection,
    factor_direction_through_transvection,
    monoidal,
    permissible,
    quadratic,
    quadratic_chart,
)


def S(text):
    return as_surface(parse_poly(text))


class CriterionFailure(AssertionError):
    pass


def check(cond, msg):
    if not cond:
        raise CriterionFailure(msg)


# -- random instances -------------------------------------------------------


def _coeff(rng):
    return rng.choice([-3, -2, -1, 1, 2, 3])


def random_wt(rng, max_degree=10, plane=False):
    """Random WT equation: n in 2..4, a few terms per level k <= n-2."""
    while True:
        n = rng.randint(2, 4)
        terms = {}
        for k in range(n - 1):
            if rng.random() < 0.3 and k:
                continue
            lo = n - k + (1 if plane else 0)
            for _ in range(rng.randint(1, 3)):
                d = rng.randint(lo, max(lo, max_degree - k))
                if d + k > max_degree:
                    continue
                i = rng.randint(0, d)
                terms[(i, d - i, k)] = _coeff(rng)
        if terms:
            terms[(0, 0, n)] = 1
            return as_surface(TriPoly(terms))


def random_quadrant(rng):
    """WT equation whose polygon is a quadrant; every other point lies
    strictly above the anti-diagonal through the vertex."""
    n = rng.randint(2, 4)
    k0 = rng.randint(0, n - 2)
    d0 = rng.randint(n - k0, n - k0 + 4)
    i0 = rng.randint(0, d0)
    V = rho((i0, d0 - i0, k0), n)
    terms = {(i0, d0 - i0, k0): _coeff(rng), (0, 0, n): 1}
    for _ in range(rng.randint(0, 4)):
        k = rng.randint(0, n - 2)
        i = math.ceil(V.x * (n - k)) + rng.randint(0, 2)
        j = math.ceil(V.y * (n - k)) + rng.randint(0, 2)
        if i + j > (V.x + V.y) * (n - k):
            terms[(i, j, k)] = _coeff(rng)
    return as_surface(TriPoly(terms)), V


def random_gwt_quadrant(rng):
    """GWT equation with quadrant polygon at (L1, 0), L1 >= 1."""
    n = rng.randint(2, 4)
    k0 = rng.randint(0, n - 2)
    m0 = rng.randint(n - k0, 3 * (n - k0) + 2)
    L1 = Fraction(m0, n - k0)
    terms = {(m0, 0, k0): _coeff(rng), (0, 0, n): 1}
    for k in range(n - 1):
        if k == k0 or rng.random() < 0.5:
            continue
        m = math.ceil(L1 * (n - k)) + rng.randint(0, 2)
        terms[(m, 0, k)] = _coeff(rng)
    for k in range(n - 1):
        base = [e for e in terms if e[2] == k]
        if not base:
            continue
        m = base[0][0]
        for _ in range(rng.randint(0, 2)):
            i = math.ceil(L1 * (n - k)) + rng.randint(0, 2)
            j = rng.randint(max(1, m - i), max(1, m - i) + 2)
            terms[(i, j, k)] = _coeff(rng)
    return as_surface(TriPoly(terms)), L1


def random_prepared(rng, max_degree=12):
    """WT equation with plane cone whose every level is a monomial times a
    unit."""
    while True:
        n = rng.randint(2, 3)
        poly = Z**n
        for k in range(n - 1):
            if k and rng.random() < 0.5:
                continue
            d = rng.randint(n - k + 1, n - k + 3)
            a = rng.randint(0, d)
            unit = TriPoly.const(_coeff(rng))
            for _ in range(rng.randint(0, 2)):
                u, v = rng.randint(0, 2), rng.randint(0, 2)
                if u + v:
                    unit = unit + TriPoly.monomial(u, v, 0, _coeff(rng))
            poly = poly + TriPoly.monomial(a, d - a, k) * unit
        if poly != Z**n and poly.total_degree() <= max_degree:
            return as_surface(poly)


def random_transvection(rng, length=3):
    m = rng.randint(1, length)
    coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)]
    return Transvection(tuple(coeffs))


# -- criteria ---------------------------------------------------------------


def c01_cubic_polygon():
    st = hironaka_polygon(S("Z^3+X^2*Z+Y^3-X^4"))
    check(st.vertices == (point(0, 1), point(1, 0)), f"vertices {st}")
    p = (Fraction(4, 3), Fraction(0))
    check(st.on_boundary(p), "(4/3,0) not on the boundary")
    check(point(*p) not in st.vertices, "(4/3,0) is a vertex")
    return f"vertices {st}; (4/3,0) on boundary, not a vertex"


def c02_projections():
    a, b = rho((3, 3, 0), 5), rho((2, 1, 3), 5)
    check(a == point(Fraction(3, 5), Fraction(3, 5)), f"rho(3,3,0)={a}")
    check(b == point(1, Fraction(1, 2)), f"rho(2,1,3)={b}")
    return f"rho(3,3,0)={a}, rho(2,1,3)={b}"


def c03_example_nonplane():
    out = []
    for r in (2, 3, 4, 5):
        s = S(f"Z^2+X^2+Y^{2 * r}")
        depth, bound = worst_branch(s)[0], bound_nonplane(s)
        check(depth == r and bound == r, f"r={r}: depth {depth}, bound {bound}")
        out.append(f"r={r}:{depth}")
    return "depth = bound = r for " + ", ".join(out)


def c04_example_prepared_plane():
    q010 = StepKind.quadratic(Direction.of(0, 1, 0))
    for n in (3, 4, 5, 6):
        s = S(f"Z^{n}+X^{n - 1}*Y^{n - 1}")
        depth, kinds = worst_branch(s)
        check(depth == n - 1, f"n={n}: depth {depth}")
        check(bound_prepared(s) == n - 1, f"n={n}: bound_prepared {bound_prepared(s)}")
        check(all(k == q010 for k in kinds[:-1]), f"n={n}: branch {[str(k) for k in kinds]}")
    return "depth = bound_prepared = n-1 for n=3..6, persisting steps all (0:1:0)"


def c05_example_quadrant_bounds():
    for n in (2, 3, 4):
        s = S(f"Z^{n}+X^{2 * n - 1}*Y^{2 * n - 1}")
        depth = worst_branch(s)[0]
        bq, bp = bound_quadrant(s), bound_prepared(s)
        check(depth == n + 1, f"n={n}: depth {depth}")
        check(bq == n + 2 and bp == 3 * n - 1, f"n={n}: quadrant {bq}, prepared {bp}")
        check(bq < bp, f"n={n}: quadrant bound not below prepared bound")
    return "depth n+1, quadrant n+2, prepared 3n-1 for n=2..4"


def c06_example_prepared_facet():
    s = S("Z^5+X^2*Y*Z^3+X^3*Y^3")
    m = polygon_metrics(hironaka_polygon(s))
    check(is_prepared(s), "not prepared")
    check(m.L == point(Fraction(3, 5), Fraction(3, 5)), f"L={m.L}")
    check(m.R == point(1, Fraction(1, 2)), f"R={m.R}")
    check(bound_prepared(s) == 4, f"bound {bound_prepared(s)}")
    o = order(quadratic(s, Direction.of(1, 1, 0)))
    check(o < 5, f"order after (1:1:0) is {o}")
    return f"prepared, L={m.L}, R={m.R}, bound 4, order after (1:1:0) = {o}"


def c07_cusp_family_slopes():
    expected = {4: Fraction(-3), 6: Fraction(-1), 7: Fraction(-3, 4)}
    slopes = {}
    for r in (4, 5, 6, 7, 8):
        p = quadratic(S(f"Z^2+(X-Y)^3+X^{r}"), Direction.of(1, 1, 0))
        facets = polygon_metrics(delta_from_poly(p, 2)).facets
        check(len(facets) == 1, f"r={r}: {len(facets)} facets")
        sl = facets[0].slope
        slopes[r] = sl
        want = (sl < -1) if r < 6 else (sl == -1) if r == 6 else (sl > -1)
        check(want, f"r={r}: slope {sl}")
        if r in expected:
            check(sl == expected[r], f"r={r}: slope {sl}, expected {expected[r]}")
    return "slopes " + ", ".join(f"r={r}:{v}" for r, v in slopes.items())


def c08_slope_minus_one_persists():
    s = S("Z^3-(X^3*Y^2+X*Y^3+Y^4)*Z+X^9*Y^8")
    before = [f.slope for f in polygon_metrics(hironaka_polygon(s)).facets]
    p = quadratic(s, Direction.of(1, 0, 0))
    after = [f.slope for f in polygon_metrics(delta_from_poly(p, 3)).facets]
    check(-1 in before, f"slopes before {before}")
    check(order(p) == 3 and -1 in after, f"slopes after {after}")
    return f"slopes before {[str(v) for v in before]}, after {[str(v) for v in after]}"


def _image_100(pt):
    return point(pt.x + pt.y - 1, pt.y)


def c09_facet_slope_law(count=200):
    rng = random.Random(9)
    nonquad = 0
    for _ in range(count):
        s = random_wt(rng)
        m = polygon_metrics(hironaka_polygon(s))
        p = quadratic(s, Direction.of(1, 0, 0))
        m2 = polygon_metrics(delta_from_poly(p, s.n))
        survivors = [f for f in m.facets if f.slope > -1]
        check(len(m2.facets) == len(survivors), f"{s}: facet images do not match")
        check(len(m2.facets) <= len(m.facets), f"{s}: facet count grew")
        for f, g in zip(survivors, m2.facets):
            check(
                g.p_upper == _image_100(f.p_upper) and g.q_lower == _image_100(f.q_lower),
                f"{s}: facet {f} has no image",
            )
            check(g.cotan == f.cotan + 1, f"{s}: cotan law fails")
            check(g.squared_length < f.squared_length, f"{s}: length did not shrink")
        if not m.is_quadrant:
            nonquad += 1
            check(m2.dLR_squared < m.dLR_squared, f"{s}: d(L,R) did not drop")
    return f"{count} equations, {nonquad} non-quadrants"


def c10_quadrant_stability(count=200):
    rng = random.Random(10)
    for _ in range(count):
        s, V = random_quadrant(rng)
        alpha = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
        cases = [
            (Direction.of(1, 0, 0), point(V.x + V.y - 1, V.y)),
            (Direction.of(0, 1, 0), point(V.x, V.x + V.y - 1)),
            (Direction.of(1, alpha, 0), point(V.x + V.y - 1, 0)),
        ]
        for d, want in cases:
            st = delta_from_poly(quadratic(s, d), s.n)
            check(st.vertices == (want,), f"{s} at {d}: {st}, expected {want}")
    return f"{count} quadrant equations, three directions each"


def _gwt_shape(p, n):
    if p.level(n) != TriPoly.const(1) or p.z_degree() != n:
        return False
    levels = levels_of(p, n)
    return levels[n - 1].is_zero() and all(is_x_regular(a) for a in levels)


def c11_generic_direction(count=100):
    rng = random.Random(11)
    for _ in range(count):
        s = random_wt(rng, plane=True)
        forms = [initial_form(a) for a in s.levels if not a.is_zero()]
        while True:
            alpha = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            if all(f.evaluate(1, alpha) for f in forms):
                break
        p = quadratic(s, Direction.of(1, alpha, 0))
        check(_gwt_shape(p, s.n), f"{s} at (1:{alpha}:0): not GWT")
        m = polygon_metrics(delta_from_poly(p, s.n))
        check(m.is_quadrant and m.L.y == 0, f"{s} at (1:{alpha}:0): polygon {m.L}..{m.R}")
    return f"{count} plane-cone equations"


def c12_transvection_invariance(count=200):
    rng = random.Random(12)
    for _ in range(count):
        s = random_wt(rng)
        t = random_transvection(rng)
        s2 = as_surface(apply_transvection(s.poly, t))
        L, L2 = (polygon_metrics(hironaka_polygon(x)).L for x in (s, s2))
        check(L.y == L2.y, f"{s} by {t}: L2 {L.y} -> {L2.y}")
        for a, b in zip(s.levels, s2.levels):
            if a.is_zero():
                check(b.is_zero(), "level appeared")
                continue
            la = polygon_metrics(level_polygon_of(a)).L
            lb = polygon_metrics(level_polygon_of(b)).L
            check(la.y == lb.y, f"{s} by {t}: level L2 {la.y} -> {lb.y}")
    return f"{count} equations"


def c13_commuting_square(count=100):
    rng = random.Random(13)
    for _ in range(count):
        s = random_wt(rng)
        alpha = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        phi = random_transvection(rng)
        beta, psi = factor_direction_through_transvection(alpha, phi)
        chart_a, _ = quadratic_chart(Direction.of(1, alpha, 0))
        chart_b, _ = quadratic_chart(Direction.of(1, beta, 0))
        route1 = apply_transvection(substitute(s.poly, chart_a), psi)
        route2 = substitute(apply_transvection(s.poly, phi), chart_b)
        check(route1 == route2, f"{s}, alpha={alpha}, phi={phi}: routes differ")
        after1 = apply_transvection(quadratic(s, Direction.of(1, alpha, 0)), psi)
        after2 = quadratic(as_surface(apply_transvection(s.poly, phi)), Direction.of(1, beta, 0))
        check(after1 == after2, f"{s}: routes differ after division")
    return f"{count} instances, equal before and after division"


def c14_gq_round_trip(count=100):
    rng = random.Random(14)
    for _ in range(count):
        r, s = rng.randint(0, 3), rng.randint(1, 4)
        phi = Transvection(
            tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(rng.randint(0, 4)))
        )
        a = X**r * (Y - phi.as_poly()) ** s
        w = detect_generalized_quadrant(a, a.total_degree())
        check(w is not None, f"{a}: no witness")
        check((w.r, w.s, w.phi) == (r, s, phi), f"{a}: got {(w.r, w.s, w.phi)}")
        m = polygon_metrics(level_polygon_of(apply_transvection(a, w.phi)))
        check(m.is_quadrant and w.exact, f"{a}: transvected polygon is not a quadrant")
    return f"{count} products recovered exactly"


def c15_gwt_quadrant_tight(count=20):
    rng = random.Random(15)
    zx = StepKind.monoidal("ZX", 0)
    for _ in range(count):
        s, L1 = random_gwt_quadrant(rng)
        depth, kinds = worst_branch(s)
        b = bound_gwt_quadrant(s)
        check(depth == math.floor(L1) == b, f"{s}: depth {depth}, floor {math.floor(L1)}, bound {b}")
        check(all(k == zx for k in kinds), f"{s}: branch {[str(k) for k in kinds]}")
    return f"{count} GWT quadrants"


def c16_drop_criterion(count=200):
    rng = random.Random(16)
    drops = 0
    for _ in range(count):
        s = random_wt(rng)
        if permissible(s, "ZX") and rng.random() < 0.5:
            p = monoidal(s, "ZX", 0)
        else:
            d = rng.choice([Direction.of(1, 0, 0), Direction.of(0, 1, 0), Direction.of(1, rng.randint(-2, 2), 0)])
            p = quadratic(s, d)
        check(p.z_degree() == s.n, f"{s}: Z-degree changed")
        low = any(rho(t, s.n).x + rho(t, s.n).y < 1 for t in p.exponents() if t[2] < s.n)
        dropped = order(p) < s.n
        drops += dropped
        check(low == dropped, f"{s} -> {p}: order {order(p)}, drop point {low}")
    return f"{count} transforms, {drops} drops"


def c17_quasi_ordinary():
    st = hironaka_polygon(S("Z^2-X^3*Y"))
    check(st.vertices == (point(Fraction(3, 2), Fraction(1, 2)),), f"polygon {st}")
    return f"quadrant at {st.vertices[0]}"


CORPUS = [
    *(f"Z^2+X^2+Y^{2 * r}" for r in (2, 3, 4, 5)),
    *(f"Z^{n}+X^{n - 1}*Y^{n - 1}" for n in (3, 4, 5, 6)),
    *(f"Z^{n}+X^{2 * n - 1}*Y^{2 * n - 1}" for n in (2, 3, 4)),
    "Z^5+X^2*Y*Z^3+X^3*Y^3",
    "Z^2-X^3",
    "Z^3-X^7",
    "Z^2-X^2",
    "Z^2-X^3*Y",
    "Z^3+X^2*Z+Y^3-X^4",
]


def c18_bound_soundness(count=50):
    rng = random.Random(18)
    cases = [S(t) for t in CORPUS] + [random_prepared(rng) for _ in range(count)]
    seen = {"quadrant_better": False, "prepared_better": False}
    checked = 0
    for s in cases:
        rep = bound_report(s)
        depth = worst_branch(s)[0]
        for rule, v in rep.values.items():
            check(v >= depth, f"{s}: {rule} bound {v} < depth {depth}")
            checked += 1
        if "QUADRANT" in rep.values and "PREPARED" in rep.values:
            q, p = rep.values["QUADRANT"], rep.values["PREPARED"]
            seen["quadrant_better"] |= q < p
            seen["prepared_better"] |= p < q
    check(all(seen.values()), f"neither bound dominates check failed: {seen}")
    return f"{len(cases)} instances, {checked} bound checks"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    run: Callable[[], str]


CRITERIA = [
    Criterion(1, "polygon of Z^3+X^2Z+Y^3-X^4", c01_cubic_polygon),
    Criterion(2, "projection of cloud points", c02_projections),
    Criterion(3, "non-plane cone family: depth r, bound r", c03_example_nonplane),
    Criterion(4, "plane cone family: depth n-1, prepared bound n-1", c04_example_prepared_plane),
    Criterion(5, "quadrant family: depth n+1, bounds n+2 and 3n-1", c05_example_quadrant_bounds),
    Criterion(6, "prepared example with one facet", c06_example_prepared_facet),
    Criterion(7, "facet slope after (1:1:0) for Z^2+(X-Y)^3+X^r", c07_cusp_family_slopes),
    Criterion(8, "slope -1 facet persists under (1:0:0)", c08_slope_minus_one_persists),
    Criterion(9, "facet slope law under (1:0:0)", c09_facet_slope_law),
    Criterion(10, "quadrant stability formulas", c10_quadrant_stability),
    Criterion(11, "generic direction gives a GWT quadrant", c11_generic_direction),
    Criterion(12, "transvections keep L2", c12_transvection_invariance),
    Criterion(13, "transvection commuting square", c13_commuting_square),
    Criterion(14, "generalized quadrant round trip", c14_gq_round_trip),
    Criterion(15, "GWT quadrant depth is floor(L1)", c15_gwt_quadrant_tight),
    Criterion(16, "drop criterion cross-check", c16_drop_criterion),
    Criterion(17, "quasi-ordinary quadrant", c17_quasi_ordinary),
    Criterion(18, "soundness of all bounds", c18_bound_soundness),
]


def run_criterion(c: Criterion):
    """Return (ok, detail) without raising on failure."""
    try:
        return True, c.run()
    except CriterionFailure as exc:
        return False, str(exc)


def run_all():
    return [(c, *run_criterion(c)) for c in CRITERIA]
