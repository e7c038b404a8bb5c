"""Putting equations into good coordinates.

Covers the Tchirnhausen shift that kills the Z^{n-1} coefficient, the
linear change Y -> Y + alpha*X making every level X-regular, and the
detection of levels that become quadrants after a transvection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Surface, TriPoly, Y, Z, as_surface, initial_form, substitute
from .errors import PreconditionError, ZeroPolynomialError
from .newton import level_polygon_of, polygon_metrics
from .transform import Transvection, apply_transvection

__all__ = [
    "Transvection",
    "GQWitness",
    "PreparationReport",
    "tchirnhausen",
    "to_gwt",
    "detect_generalized_quadrant",
    "preparation_report",
]


def tchirnhausen(S: Surface) -> Surface:
    """Substitute Z -> Z - a_{n-1}/n; returns ``S`` itself when already WT."""
    if S.is_wt:
        return S
    shift = S.levels[S.n - 1] / S.n
    return as_surface(substitute(S.poly, {"Z": Z - shift}))


def gwt_alpha(S: Surface) -> int:
    """Smallest non-negative integer alpha with every nonzero initial level
    form nonvanishing at (1, alpha)."""
    forms = [initial_form(a) for a in S.levels if not a.is_zero()]
    alpha = 0
    while any(f.evaluate(1, alpha) == 0 for f in forms):
        alpha += 1
    return alpha


def to_gwt(S: Surface) -> tuple[Surface, Fraction]:
    if not S.is_wt:
        raise PreconditionError("NOT_WT", "the Z^{n-1} coefficient must vanish")
    alpha = gwt_alpha(S)
    if alpha == 0:
        return S, Fraction(0)
    out = as_surface(apply_transvection(S.poly, Transvection((alpha,))))
    return out, Fraction(alpha)


# -- generalized quadrants ---------------------------------------------------
# Univariate polynomials in Y are dense lists of Fractions, index = exponent.


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _ymul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _ysub(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] -= b
    return _trim(out)


def _series_inverse(g, s):
    """Inverse of ``g`` modulo Y^s (requires g[0] != 0)."""
    inv = [Fraction(0)] * s
    if s == 0:
        return inv
    inv[0] = 1 / g[0]
    for m in range(1, s):
        acc = sum((g[t] * inv[m - t] for t in range(1, min(m, len(g) - 1) + 1)), Fraction(0))
        inv[m] = -acc * inv[0]
    return inv


def _x_slices(b: TriPoly, top: int):
    """b as sum_t X^t * b_t(Y), for t = 0..top."""
    slices = [[] for _ in range(top + 1)]
    for (i, j, _), c in b.terms.items():
        if i <= top:
            row = slices[i]
            if len(row) <= j:
                row.extend([Fraction(0)] * (j + 1 - len(row)))
            row[j] += c
    return [_trim(r) for r in slices]


@dataclass(frozen=True)
class GQWitness:
    """a = X^r (Y - phi(X))^s * unit, checked up to X-degree ``verified_to``.

    ``exact`` is True when the transvection Y -> Y + phi(X) turns the level
    polygon into a literal quadrant with vertex (r, s).
    """

    r: int
    s: int
    phi: Transvection
    verified_to: int
    exact: bool


def _is_quadrant_at(p: TriPoly, r: int, s: int) -> bool:
    if p.coefficient(r, s, 0) == 0:
        return False
    return all(i >= r and j >= s for i, j, _ in p.exponents())


def detect_generalized_quadrant(a: TriPoly, D: int | None = None) -> GQWitness | None:
    """Look for a transvection turning the polygon of ``a`` into a quadrant.

    Splits off X^r, lifts the factorization b = c * u (c monic of degree s
    in Y, u a unit) up to X-degree ``D`` and checks that c agrees with
    (Y - phi)^s there.  Returns None when no such phi exists within the
    bound.
    """
    if a.is_zero():
        raise ZeroPolynomialError("cannot detect a quadrant in the zero polynomial")
    if any(k for _, _, k in a.exponents()):
        raise ValueError("level polynomial must not involve Z")
    if D is None:
        D = a.total_degree()
    r = a.x_valuation()
    b = TriPoly({(i - r, j, k): c for (i, j, k), c in a.terms.items()})
    slices = _x_slices(b, D)
    b0 = slices[0]
    s = next(j for j, c in enumerate(b0) if c)
    g0 = b0[s:]
    ginv = _series_inverse(g0, s)

    cs = [[Fraction(0)] * s + [Fraction(1)]]  # c_0 = Y^s
    us = [g0]
    for t in range(1, D + 1):
        e = list(slices[t])
        for q in range(1, t):
            e = _ysub(e, _ymul(cs[q], us[t - q]))
        ct = _trim(_ymul(e, ginv)[:s])
        rem = _ysub(e, _ymul(ct, g0))
        assert all(c == 0 for c in rem[:s]), "lifting left a low-order remainder"
        cs.append(ct)
        us.append(rem[s:])

    phi = [Fraction(0)] * (D + 1)
    if s:
        for t in range(1, D + 1):
            top = cs[t][s - 1] if len(cs[t]) >= s else Fraction(0)
            phi[t] = -top / s
    trans = Transvection(tuple(phi[1:]))
    target = (Y - trans.as_poly()) ** s
    lifted = TriPoly({(t, j, 0): v for t, ct in enumerate(cs) for j, v in enumerate(ct) if v})
    if target.filter(lambda i, j, k: i <= D) != lifted:
        return None
    exact = _is_quadrant_at(apply_transvection(a, trans), r, s)
    return GQWitness(r, s, trans, D, exact)


@dataclass(frozen=True)
class PreparationReport:
    """Outcome of :func:`preparation_report`.

    ``witnesses[k]`` is None for zero levels and for levels listed in
    ``unresolved``.  ``r_bound`` and ``psi`` are None when some level is
    unresolved.
    """

    is_prepared: bool
    witnesses: tuple
    unresolved: tuple
    mu: dict
    r_bound: int | None
    psi: Transvection | None


def _x_order(coeffs) -> int:
    return next(i + 1 for i, c in enumerate(coeffs) if c)


def _mu(p: Transvection, q: Transvection) -> int:
    if p == q:
        return 0
    m = max(len(p.coeffs), len(q.coeffs))
    pc = p.coeffs + (Fraction(0),) * (m - len(p.coeffs))
    qc = q.coeffs + (Fraction(0),) * (m - len(q.coeffs))
    return _x_order([x - y for x, y in zip(pc, qc)])


def is_prepared(S: Surface) -> bool:
    return all(
        polygon_metrics(level_polygon_of(a)).is_quadrant for a in S.levels if not a.is_zero()
    )


def preparation_report(S: Surface, D: int | None = None) -> PreparationReport:
    """Quadrant status of every level, with transvection witnesses.

    ``mu[(i, j)]`` is the X-order of phi_i - phi_j (0 when equal) and
    ``r_bound`` its maximum: the number of quadratic steps after which one
    common transvection ``psi`` straightens every remaining level.  ``psi``
    is the tail past degree ``r_bound`` of the witness of the lowest level.
    """
    if not S.is_wt:
        raise PreconditionError("NOT_WT", "the Z^{n-1} coefficient must vanish")
    if not S.plane_cone:
        raise PreconditionError("NOT_PLANE_CONE", "initial form is not Z^n")
    witnesses = [None] * S.n
    unresolved = []
    for k, a in enumerate(S.levels):
        if a.is_zero():
            continue
        w = detect_generalized_quadrant(a, D)
        if w is None:
            unresolved.append(k)
        witnesses[k] = w
    found = [(k, w) for k, w in enumerate(witnesses) if w is not None]
    mu = {}
    for x, (i, wi) in enumerate(found):
        for j, wj in found[x + 1:]:
            mu[(i, j)] = _mu(wi.phi, wj.phi)
    r_bound = psi = None
    if not unresolved:
        r_bound = max(mu.values(), default=0)
        tail = found[0][1].phi.coeffs[r_bound:] if found else ()
        psi = Transvection(tail)
    return PreparationReport(
        is_prepared(S), tuple(witnesses), tuple(unresolved), mu, r_bound, psi
    )
