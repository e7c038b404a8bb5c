"""Blow-up charts, transvections and permissibility tests.

Transforms return raw ``TriPoly`` values: once the multiplicity drops the
result is no longer a Weierstrass equation, so callers decide whether to
re-validate with ``as_surface``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import X, Y, Z, TriPoly, divide_monomial_exact, substitute
from .errors import ForbiddenDirectionError, NotPermissibleError


def _q(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Direction:
    """Point (a:b:c) of the exceptional divisor, first nonzero entry 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, a, b, c) -> Direction:
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        lead = next((v for v in (a, b, c) if v), None)
        if lead is None:
            raise ValueError("direction (0:0:0) is not a projective point")
        return cls(a / lead, b / lead, c / lead)

    @classmethod
    def parse(cls, text: str) -> Direction:
        parts = text.strip().strip("()").split(":")
        if len(parts) != 3:
            raise ValueError(f"direction must look like a:b:c, got {text!r}")
        return cls.of(*(Fraction(p.strip()) for p in parts))

    def __str__(self):
        return f"({_q(self.a)}:{_q(self.b)}:{_q(self.c)})"


@dataclass(frozen=True)
class Transvection:
    """Y -> Y + sum(coeffs[i-1] * X^i); the empty tuple is the identity."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def parse(cls, text: str) -> Transvection:
        text = text.strip().strip("()")
        if not text:
            return cls()
        return cls(tuple(Fraction(p.strip()) for p in text.split(",")))

    def is_identity(self) -> bool:
        return not self.coeffs

    def as_poly(self) -> TriPoly:
        """The series part sum(alpha_i X^i) as a polynomial in X."""
        return TriPoly({(i + 1, 0, 0): c for i, c in enumerate(self.coeffs)})

    def inverse(self) -> Transvection:
        return Transvection(tuple(-c for c in self.coeffs))

    def __str__(self):
        return "(" + ",".join(_q(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class StepKind:
    kind: str
    direction: Direction | None = None
    gamma: Fraction | None = None
    transvection: Transvection | None = None

    QUADRATIC = "QUADRATIC"
    MONOIDAL_ZX = "MONOIDAL_ZX"
    MONOIDAL_ZY = "MONOIDAL_ZY"
    TRANSVECTION = "TRANSVECTION"

    @classmethod
    def quadratic(cls, d: Direction) -> StepKind:
        return cls(cls.QUADRATIC, direction=d)

    @classmethod
    def monoidal(cls, axis: str, gamma=0) -> StepKind:
        kind = {"ZX": cls.MONOIDAL_ZX, "ZY": cls.MONOIDAL_ZY}[axis]
        return cls(kind, gamma=Fraction(gamma))

    @classmethod
    def transvect(cls, t: Transvection) -> StepKind:
        return cls(cls.TRANSVECTION, transvection=t)

    def __str__(self):
        if self.kind == self.QUADRATIC:
            return f"quadratic {self.direction}"
        if self.kind == self.TRANSVECTION:
            return f"transvection {self.transvection}"
        axis = "zx" if self.kind == self.MONOIDAL_ZX else "zy"
        return f"monoidal-{axis} {_q(self.gamma)}"


def apply_transvection(p: TriPoly, t: Transvection) -> TriPoly:
    if t.is_identity():
        return p
    return substitute(p, {"Y": Y + t.as_poly()})


def quadratic_chart(d: Direction):
    """Substitution of the chart centred at ``d`` and the variable whose
    n-th power is divided out afterwards."""
    if d.a:
        return {"Y": X * (Y + d.b), "Z": X * (Z + d.c)}, "X"
    if d.b:
        return {"X": X * Y, "Z": Y * (Z + d.c)}, "Y"
    raise ForbiddenDirectionError(
        "direction (0:0:1) never carries a point of multiplicity n"
    )


def _divide_power(p: TriPoly, var: str, n: int) -> TriPoly:
    m = {"X": (n, 0, 0), "Y": (0, n, 0)}[var]
    return divide_monomial_exact(p, m)


def quadratic_poly(p: TriPoly, n: int, d: Direction) -> TriPoly:
    sub, var = quadratic_chart(d)
    return _divide_power(substitute(p, sub), var, n)


def quadratic(S, d: Direction) -> TriPoly:
    """Strict transform of ``S`` under the blow-up of the origin, in the
    chart centred at direction ``d``."""
    return quadratic_poly(S.poly, S.n, d)


def permissible_poly(p: TriPoly, n: int, axis: str) -> bool:
    if axis == "ZX":
        return all(i + k >= n for i, _, k in p.exponents())
    if axis == "ZY":
        return all(j + k >= n for _, j, k in p.exponents())
    raise ValueError(f"axis must be ZX or ZY, got {axis!r}")


def permissible(S, axis: str) -> bool:
    return permissible_poly(S.poly, S.n, axis)


def monoidal(S, axis: str, gamma=0) -> TriPoly:
    """Blow-up of the curve Z = X = 0 (``ZX``) or Z = Y = 0 (``ZY``), chart
    centred at Z = gamma."""
    if not permissible(S, axis):
        raise NotPermissibleError(f"curve {axis} is not permissible for {S.poly}")
    var = axis[1]
    v = X if var == "X" else Y
    image = substitute(S.poly, {"Z": v * (Z + Fraction(gamma))})
    return _divide_power(image, var, S.n)


def apply_step(S, kind: StepKind) -> TriPoly:
    if kind.kind == StepKind.QUADRATIC:
        return quadratic(S, kind.direction)
    if kind.kind == StepKind.TRANSVECTION:
        return apply_transvection(S.poly, kind.transvection)
    axis = "ZX" if kind.kind == StepKind.MONOIDAL_ZX else "ZY"
    return monoidal(S, axis, kind.gamma)


def factor_direction_through_transvection(alpha, phi: Transvection):
    """Return (beta, psi) with psi(chart_alpha(F)) == chart_beta(phi(F)).

    ``chart_alpha`` is the quadratic chart at (1:alpha:0) before division.
    """
    v = phi.coeffs
    v1 = v[0] if v else Fraction(0)
    return Fraction(alpha) - v1, Transvection(v[1:])


__all__ = [
    "Direction",
    "Transvection",
    "StepKind",
    "apply_transvection",
    "quadratic_chart",
    "quadratic_poly",
    "quadratic",
    "permissible_poly",
    "permissible",
    "monoidal",
    "apply_step",
    "factor_direction_through_transvection",
]
