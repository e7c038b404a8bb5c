"""Closed-form upper bounds on the number of blow-ups before the
multiplicity drops, each guarded by its hypotheses."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Surface
from .errors import PreconditionError, SurfresError
from .newton import hironaka_polygon, polygon_metrics
from .prepare import is_prepared

NONPLANE = "NONPLANE"
QUADRANT = "QUADRANT"
GWT_QUADRANT = "GWT_QUADRANT"
PREPARED = "PREPARED"

RULES = (NONPLANE, QUADRANT, GWT_QUADRANT, PREPARED)


def _metrics(S: Surface):
    return polygon_metrics(hironaka_polygon(S))


def _theta_tan(S: Surface) -> Fraction | None:
    m = _metrics(S)
    if m.is_quadrant:
        return None
    lam, mu = m.leftmost()
    return mu / (lam - 1)


def bound_nonplane(S: Surface) -> int:
    """1 if the polygon is a single vertex, else floor(mu / (1 - lam)) for
    the leftmost vertex (lam, mu)."""
    if S.plane_cone:
        raise PreconditionError("PLANE_CONE", "tangent cone is the plane Z = 0")
    if not S.is_gwt:
        raise PreconditionError("NOT_GWT", "every level must be X-regular")
    m = _metrics(S)
    if m.is_quadrant:
        return 1
    return math.floor(-_theta_tan(S))


def bound_quadrant(S: Surface) -> int:
    if not S.is_wt:
        raise PreconditionError("NOT_WT", "the Z^{n-1} coefficient must vanish")
    m = _metrics(S)
    if not m.is_quadrant or m.L is None:
        raise PreconditionError("NOT_QUADRANT", "polygon has a compact facet")
    L1, L2 = m.L
    return math.floor(L1) + math.floor(L2) + S.n


def bound_gwt_quadrant(S: Surface) -> int:
    m = _metrics(S)
    if not (S.is_gwt and m.is_quadrant and m.L is not None and m.L.y == 0):
        raise PreconditionError(
            "NOT_GWT_QUADRANT", "needs a GWT equation whose polygon is a quadrant on the x-axis"
        )
    return math.floor(m.L.x)


def bound_prepared(S: Surface) -> int:
    """floor(n (R1 + L2 - 1) + 1), read as an inclusive bound."""
    if not S.is_wt:
        raise PreconditionError("NOT_WT", "the Z^{n-1} coefficient must vanish")
    if not S.plane_cone:
        raise PreconditionError("NOT_PLANE_CONE", "initial form is not Z^n")
    if not is_prepared(S):
        raise PreconditionError("NOT_PREPARED", "some level polygon is not a quadrant")
    m = _metrics(S)
    R1 = m.rightmost().x
    L2 = m.leftmost().y
    return math.floor(S.n * (R1 + L2 - 1) + 1)


_RULE_FUNCS = {
    NONPLANE: bound_nonplane,
    QUADRANT: bound_quadrant,
    GWT_QUADRANT: bound_gwt_quadrant,
    PREPARED: bound_prepared,
}


@dataclass(frozen=True)
class BoundReport:
    applicable: frozenset
    values: dict = field(default_factory=dict)
    theta_tan: Fraction | None = None
    reasons: dict = field(default_factory=dict)


def bound_report(S: Surface) -> BoundReport:
    """Evaluate every rule whose hypotheses hold; ``reasons`` maps each
    other rule to the failing precondition."""
    values, reasons = {}, {}
    for rule in RULES:
        try:
            values[rule] = _RULE_FUNCS[rule](S)
        except PreconditionError as exc:
            reasons[rule] = exc.code
        except SurfresError as exc:
            reasons[rule] = type(exc).__name__
    theta = _theta_tan(S) if NONPLANE in values else None
    return BoundReport(frozenset(values), values, theta, reasons)
