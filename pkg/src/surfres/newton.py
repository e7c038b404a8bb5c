"""Point clouds, level polygons and the projected polygon of an equation.

Every polygon here is a "staircase": the convex hull of a finite set of
points together with their translates by the closed positive quadrant.  It
is stored as its vertex chain, read left to right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from . import _backend
from .algebra import Surface, TriPoly
from .errors import EmptyPolygonError


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self):
        return f"({_q(self.x)},{_q(self.y)})"


def _q(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def point(x, y) -> Point2:
    return Point2(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Staircase:
    vertices: tuple[Point2, ...] = ()

    def is_empty(self) -> bool:
        return not self.vertices

    def boundary_y(self, x) -> Fraction | None:
        """Height of the lower boundary above abscissa ``x`` (None left of
        the polygon)."""
        vs = self.vertices
        x = Fraction(x)
        if not vs or x < vs[0].x:
            return None
        for p, q in zip(vs, vs[1:]):
            if x <= q.x:
                return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)
        return vs[-1].y

    def contains(self, pt) -> bool:
        h = self.boundary_y(pt[0])
        return h is not None and Fraction(pt[1]) >= h

    def on_boundary(self, pt) -> bool:
        """True when ``pt`` lies on the frontier of the region, including the
        vertical ray above L and the horizontal ray right of R."""
        if not self.contains(pt):
            return False
        x, y = Fraction(pt[0]), Fraction(pt[1])
        return x == self.vertices[0].x or y == self.boundary_y(x)

    def translate(self, dx, dy) -> Staircase:
        dx, dy = Fraction(dx), Fraction(dy)
        return Staircase(tuple(Point2(p.x + dx, p.y + dy) for p in self.vertices))

    def __str__(self):
        return "[" + ", ".join(str(p) for p in self.vertices) + "]"


def staircase_hull(pts: Iterable) -> Staircase:
    pts = [point(*p) for p in pts]
    if not pts:
        return Staircase()
    den = 1
    for p in pts:
        for v in p:
            den = den * v.denominator // math.gcd(den, v.denominator)
    xs = [int(p.x * den) for p in pts]
    ys = [int(p.y * den) for p in pts]
    chain = _backend.active.staircase(xs, ys)
    return Staircase(tuple(pts[t] for t in chain))


def cloud_of(p: TriPoly, n: int) -> set[tuple[int, int, int]]:
    return p.exponents() | {(0, 0, n)}


def cloud(S: Surface) -> set[tuple[int, int, int]]:
    return cloud_of(S.poly, S.n)


def rho(t, n: int) -> Point2:
    i, j, k = t
    if k >= n:
        raise ValueError(f"cannot project {tuple(t)}: Z-exponent must be below {n}")
    return Point2(Fraction(i, n - k), Fraction(j, n - k))


def level_polygon_of(a: TriPoly) -> Staircase:
    return staircase_hull((i, j) for i, j, _ in a.exponents())


def level_polygon(S: Surface, k: int) -> Staircase:
    if not 0 <= k < S.n:
        raise ValueError(f"level {k} outside 0..{S.n - 1}")
    return level_polygon_of(S.levels[k])


def delta_from_poly(p: TriPoly, n: int) -> Staircase:
    """Projected polygon of any polynomial, treating ``n`` as the apex
    height; terms with Z-exponent >= n are ignored."""
    return staircase_hull(rho(t, n) for t in p.exponents() if t[2] < n)


def hironaka_polygon(S: Surface) -> Staircase:
    return delta_from_poly(S.poly, S.n)


@dataclass(frozen=True)
class Facet:
    p_upper: Point2
    q_lower: Point2

    @property
    def slope(self) -> Fraction:
        p, q = self.p_upper, self.q_lower
        return -(p.y - q.y) / (q.x - p.x)

    @property
    def cotan(self) -> Fraction:
        return 1 / self.slope

    @property
    def squared_length(self) -> Fraction:
        p, q = self.p_upper, self.q_lower
        return (q.x - p.x) ** 2 + (p.y - q.y) ** 2


@dataclass(frozen=True)
class PolygonMetrics:
    L: Point2 | None
    R: Point2 | None
    facets: tuple[Facet, ...]
    is_quadrant: bool
    dLR_squared: Fraction
    has_drop_point: bool

    def leftmost(self) -> Point2:
        if self.L is None:
            raise EmptyPolygonError("empty polygon has no leftmost vertex")
        return self.L

    def rightmost(self) -> Point2:
        if self.R is None:
            raise EmptyPolygonError("empty polygon has no rightmost vertex")
        return self.R


def polygon_metrics(st: Staircase) -> PolygonMetrics:
    vs = st.vertices
    if not vs:
        return PolygonMetrics(None, None, (), True, Fraction(0), False)
    facets = tuple(Facet(p, q) for p, q in zip(vs, vs[1:]))
    L, R = vs[0], vs[-1]
    d2 = (R.x - L.x) ** 2 + (R.y - L.y) ** 2
    drop = any(v.x + v.y < 1 for v in vs)
    return PolygonMetrics(L, R, facets, len(vs) == 1, d2, drop)
