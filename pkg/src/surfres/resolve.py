"""Resolution driver: step selection, critical directions, traces and the
exhaustive worst-case search over exceptional directions.

Every intermediate equation is brought back to WT form (Tchirnhausen) before
the next step, so permissibility and the polygons are always read in the
same kind of coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Surface, TriPoly, as_surface, initial_form, order
from .errors import MissingDirectionError, StepLimitExceeded
from .newton import Staircase, hironaka_polygon
from .prepare import tchirnhausen
from .transform import Direction, StepKind, monoidal, permissible, quadratic

DROPPED = "DROPPED"
SMOOTH = "SMOOTH"
STEP_LIMIT = "STEP_LIMIT"

DEFAULT_MAX_STEPS = 64


@dataclass(frozen=True)
class TraceStep:
    kind: StepKind
    before_n: int
    after_order: int
    after_poly: TriPoly
    delta_snapshot: Staircase | None
    surface: Surface | None = None  # WT form of the result, None after a drop

    @property
    def dropped(self) -> bool:
        return self.after_order < self.before_n


@dataclass(frozen=True)
class Trace:
    initial: Surface
    steps: tuple
    outcome: str
    warnings: tuple = ()

    @property
    def depth(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Strategy:
    kind: str
    directions: tuple = ()

    GIVEN = "GIVEN"
    WORST = "WORST"
    GENERIC = "GENERIC"

    @classmethod
    def given(cls, directions) -> Strategy:
        return cls(cls.GIVEN, tuple(directions))

    @classmethod
    def worst(cls) -> Strategy:
        return cls(cls.WORST)

    @classmethod
    def generic(cls) -> Strategy:
        return cls(cls.GENERIC)

    @classmethod
    def parse(cls, text: str) -> Strategy:
        text = text.strip()
        if text == "generic":
            return cls.generic()
        if text == "worst":
            return cls.worst()
        if text.startswith("dirs="):
            items = [t for t in text[5:].replace(";", ",").split(",") if t.strip()]
            return cls.given(Direction.parse(t) for t in items)
        raise ValueError(f"unknown strategy {text!r}; use generic, worst or dirs=a:b:c,...")


class DirectionList(list):
    """Candidate directions; ``generic`` is the representative of all
    directions outside the critical set and ``warnings`` flags critical
    directions that are not rational."""

    def __init__(self, items, generic, warnings=()):
        super().__init__(items)
        self.generic = generic
        self.warnings = tuple(warnings)


def normalize(p: TriPoly) -> Surface:
    return tchirnhausen(as_surface(p))


def _axis_step(S: Surface):
    for axis in ("ZX", "ZY"):
        if permissible(S, axis):
            return StepKind.monoidal(axis, 0)
    return None


def _apply(S: Surface, kind: StepKind) -> TriPoly:
    if kind.kind == StepKind.QUADRATIC:
        return quadratic(S, kind.direction)
    axis = "ZX" if kind.kind == StepKind.MONOIDAL_ZX else "ZY"
    return monoidal(S, axis, kind.gamma)


def _record(S: Surface, kind: StepKind) -> TraceStep:
    p = _apply(S, kind)
    o = order(p)
    if o < S.n:
        return TraceStep(kind, S.n, o, p, None, None)
    nxt = normalize(p)
    return TraceStep(kind, S.n, o, p, hironaka_polygon(nxt), nxt)


def step(S: Surface, direction: Direction | None = None) -> TraceStep:
    """One move of the algorithm: blow up (Z,X) or else (Z,Y) when
    permissible, otherwise the origin in the chart at ``direction``."""
    if S.n < 2:
        raise ValueError("a step needs multiplicity at least 2")
    kind = _axis_step(S)
    if kind is None:
        if direction is None:
            raise MissingDirectionError("no permissible curve; a direction is required")
        kind = StepKind.quadratic(direction)
    return _record(S, kind)


# -- critical directions ----------------------------------------------------


def _rational_roots(levels):
    """Rational roots of prod a_k(1, Y) over the initial forms of the
    levels, plus a flag when some irreducible factor has degree >= 2."""
    import sympy

    y = sympy.Symbol("y")
    roots, irrational = set(), False
    for a in levels:
        form = initial_form(a)
        expr = sum(
            sympy.Rational(c.numerator, c.denominator) * y**j for (_, j, _), c in form.terms.items()
        )
        if expr.is_number:
            continue
        _, factors = sympy.factor_list(sympy.Poly(expr, y, domain="QQ"))
        for f, _ in factors:
            if f.degree() == 1:
                c1, c0 = f.all_coeffs()
                roots.add(Fraction(int((-c0 / c1).p), int((-c0 / c1).q)))
            elif f.degree() >= 2:
                irrational = True
    return sorted(roots), irrational


def _nfold_points(form: TriPoly, n: int):
    """Rational points where every (n-1)-th partial of the cone vanishes."""
    import sympy

    rows = []
    for p, q in itertools.product(range(n), repeat=2):
        r = n - 1 - p - q
        if r < 0:
            continue
        d = form
        for var, times in zip("XYZ", (p, q, r)):
            for _ in range(times):
                d = d.derivative(var)
        if not d.is_zero():
            rows.append([d.coefficient(1, 0, 0), d.coefficient(0, 1, 0), d.coefficient(0, 0, 1)])
    if not rows:
        return []
    m = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows])
    out = []
    for vec in m.nullspace():
        vals = [Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in vec]
        if any(vals):
            out.append(Direction.of(*vals))
    return out


def critical_directions(S: Surface) -> DirectionList:
    """Directions where the multiplicity may persist after a quadratic
    step, with one generic representative appended.

    Candidates are kept only when the transform really keeps order n; the
    generic representative is always kept.
    """
    if S.n < 2:
        raise ValueError("critical directions need multiplicity at least 2")
    form = initial_form(S.poly)
    warnings = []
    if S.plane_cone:
        roots, irrational = _rational_roots([a for a in S.levels if not a.is_zero()])
        if irrational:
            warnings.append("some critical directions are not rational and were skipped")
        candidates = [Direction.of(0, 1, 0)] + [Direction.of(1, a, 0) for a in roots]
        avoid = set(roots)
    else:
        candidates = _nfold_points(form, S.n)
        avoid = {d.b for d in candidates if d.a == 1 and d.c == 0}
    g = 0
    while g in avoid:
        g += 1
    generic = Direction.of(1, g, 0)
    kept = [d for d in candidates if order(quadratic(S, d)) >= S.n]
    return DirectionList(kept + [generic], generic, warnings)


# -- exhaustive search ------------------------------------------------------


@dataclass
class _Search:
    max_steps: int
    memo: dict = field(default_factory=dict)

    def children(self, S: Surface):
        kind = _axis_step(S)
        if kind is not None:
            return [kind]
        return [StepKind.quadratic(d) for d in critical_directions(S)]

    def best(self, S: Surface, prefix: tuple):
        """Deepest branch below ``S`` as (depth, kinds)."""
        hit = self.memo.get(S.poly)
        if hit is None:
            if len(prefix) >= self.max_steps:
                raise StepLimitExceeded(self.max_steps, prefix + (self.children(S)[0],))
            result = (0, ())
            for kind in self.children(S):
                p = _apply(S, kind)
                if order(p) < S.n:
                    cand = (1, (kind,))
                else:
                    d, path = self.best(normalize(p), prefix + (kind,))
                    cand = (1 + d, (kind,) + path)
                if cand[0] > result[0]:
                    result = cand
            hit = self.memo[S.poly] = result
        if len(prefix) + hit[0] > self.max_steps:
            raise StepLimitExceeded(self.max_steps, (prefix + hit[1])[: self.max_steps + 1])
        return hit


def worst_branch(S: Surface, max_steps: int = DEFAULT_MAX_STEPS):
    """(depth, kinds) of a deepest branch; ties go to the first candidate."""
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    S = tchirnhausen(S)
    if S.n <= 1:
        return 0, ()
    return _Search(max_steps).best(S, ())


def worst_case_depth(S: Surface, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    return worst_branch(S, max_steps)[0]


def _replay(S: Surface, kinds, max_steps):
    steps = []
    for kind in kinds[:max_steps]:
        st = _record(S, kind)
        steps.append(st)
        if st.dropped:
            return steps, DROPPED
        S = st.surface
    return steps, STEP_LIMIT


def resolve_trace(S: Surface, strat: Strategy, max_steps: int = DEFAULT_MAX_STEPS) -> Trace:
    """Run the algorithm until the multiplicity drops or ``max_steps``
    transformations have been made."""
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    start = S
    S = tchirnhausen(S)
    if S.n <= 1:
        return Trace(start, (), SMOOTH)
    if strat.kind == Strategy.WORST:
        try:
            _, kinds = worst_branch(S, max_steps)
        except StepLimitExceeded as exc:
            kinds = exc.prefix
        steps, outcome = _replay(S, kinds, max_steps)
        return Trace(start, tuple(steps), outcome)

    steps, warnings = [], []
    given = list(strat.directions)
    while len(steps) < max_steps:
        direction = None
        if _axis_step(S) is None:
            if strat.kind == Strategy.GENERIC:
                dl = critical_directions(S)
                warnings.extend(w for w in dl.warnings if w not in warnings)
                direction = dl.generic
            elif given:
                direction = given.pop(0)
            else:
                raise MissingDirectionError(
                    f"quadratic step {len(steps) + 1} needs a direction but none is left"
                )
        st = step(S, direction)
        steps.append(st)
        if st.dropped:
            return Trace(start, tuple(steps), DROPPED, tuple(warnings))
        S = st.surface
    return Trace(start, tuple(steps), STEP_LIMIT, tuple(warnings))
