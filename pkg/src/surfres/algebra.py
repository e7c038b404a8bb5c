"""Exact trivariate polynomials over the rationals and Weierstrass surfaces.

A ``TriPoly`` keeps integer numerators under one positive common
denominator, normalized so that numerators and denominator are coprime.
Two polynomials are equal exactly when their term maps are equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping

from . import _backend
from .errors import (
    NonDivisibleError,
    NotWeierstrassError,
    PolyParseError,
    ZeroPolynomialError,
)

INFINITE = math.inf

_SHIFT = 20
_MASK = (1 << _SHIFT) - 1
_MAX_EXP = _MASK


def pack(i: int, j: int, k: int) -> int:
    if not (0 <= i <= _MAX_EXP and 0 <= j <= _MAX_EXP and 0 <= k <= _MAX_EXP):
        raise ValueError(f"exponent out of range: {(i, j, k)}")
    return (i << 40) | (j << 20) | k


def unpack(key: int) -> tuple[int, int, int]:
    return key >> 40, (key >> 20) & _MASK, key & _MASK


def _key_degree(key):
    return (key >> 40) + ((key >> 20) & _MASK) + (key & _MASK)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class TriPoly:
    """Finite-support polynomial in X, Y, Z with rational coefficients.

    Immutable.  Build one from a mapping ``{(i, j, k): coefficient}``, from
    the module constants ``X``, ``Y``, ``Z`` with arithmetic, or with
    :func:`parse_poly`.
    """

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], object] | None = None):
        c, d = {}, 1
        if terms:
            fr = {pack(*e): _as_fraction(v) for e, v in terms.items()}
            for v in fr.values():
                d = d * v.denominator // math.gcd(d, v.denominator)
            c = {k: v.numerator * (d // v.denominator) for k, v in fr.items() if v}
        self._set(c, d)

    def _set(self, c, d):
        if not c:
            c, d = {}, 1
        else:
            g = math.gcd(d, *c.values())
            if g > 1:
                c = {k: v // g for k, v in c.items()}
                d //= g
        self._c = c
        self._d = d
        self._hash = None

    @classmethod
    def _from_raw(cls, c, d):
        obj = cls.__new__(cls)
        obj._set(c, d)
        return obj

    @classmethod
    def const(cls, value) -> TriPoly:
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, i: int, j: int, k: int, coeff=1) -> TriPoly:
        return cls({(i, j, k): coeff})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int, int], Fraction]:
        d = self._d
        return {unpack(k): Fraction(v, d) for k, v in self._c.items()}

    def items(self) -> list[tuple[tuple[int, int, int], Fraction]]:
        """Terms in canonical order: Z-exponent descending, then X, then Y
        ascending."""
        return sorted(self.terms.items(), key=lambda t: (-t[0][2], t[0][0], t[0][1]))

    def exponents(self) -> set[tuple[int, int, int]]:
        return {unpack(k) for k in self._c}

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        v = self._c.get(pack(i, j, k), 0)
        return Fraction(v, self._d)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def z_degree(self) -> int:
        """Largest Z-exponent; -1 for the zero polynomial."""
        return max((k & _MASK for k in self._c), default=-1)

    def total_degree(self) -> int:
        return max((_key_degree(k) for k in self._c), default=-1)

    def x_valuation(self) -> int:
        """Largest r such that X^r divides the polynomial (zero: raises)."""
        if not self._c:
            raise ZeroPolynomialError("zero polynomial has no X-valuation")
        return min(k >> 40 for k in self._c)

    def level(self, k: int) -> TriPoly:
        """Coefficient of Z^k, as a polynomial in X and Y."""
        c = {key - k: v for key, v in self._c.items() if key & _MASK == k}
        return TriPoly._from_raw(c, self._d)

    def filter(self, keep) -> TriPoly:
        """Sub-polynomial of the terms whose exponent triple satisfies ``keep``."""
        c = {key: v for key, v in self._c.items() if keep(*unpack(key))}
        return TriPoly._from_raw(c, self._d)

    def evaluate(self, x=0, y=0, z=0) -> Fraction:
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        total = Fraction(0)
        for (i, j, k), v in self.terms.items():
            total += v * x**i * y**j * z**k
        return total

    def derivative(self, var: str) -> TriPoly:
        idx = "XYZ".index(var)
        out = {}
        for e, v in self.terms.items():
            if e[idx]:
                e2 = list(e)
                e2[idx] -= 1
                out[tuple(e2)] = v * e[idx]
        return TriPoly(out)

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TriPoly.const(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._d == other._d and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._d, frozenset(self._c.items())))
        return self._hash

    def __neg__(self):
        return TriPoly._from_raw({k: -v for k, v in self._c.items()}, self._d)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self._d, other._d
        lcm = d1 * d2 // math.gcd(d1, d2)
        kern = _backend.active
        acc = kern.shift(self._c, 0, lcm // d1)
        kern.addmul(acc, other._c, lcm // d2)
        return TriPoly._from_raw(acc, lcm)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return TriPoly()
            return TriPoly._from_raw(
                {k: v * f.numerator for k, v in self._c.items()}, self._d * f.denominator
            )
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return TriPoly._from_raw(_backend.active.mul(self._c, other._c), self._d * other._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        return TriPoly._from_raw(_backend.active.power(self._c, e), self._d**e)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"TriPoly({format_poly(self)!r})"


def _coerce(v):
    if isinstance(v, TriPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return TriPoly.const(v)
    return None


ZERO = TriPoly()
ONE = TriPoly.const(1)
X = TriPoly.monomial(1, 0, 0)
Y = TriPoly.monomial(0, 1, 0)
Z = TriPoly.monomial(0, 0, 1)


def order(p: TriPoly):
    """Minimal total degree of a term; ``INFINITE`` for zero."""
    if not p._c:
        return INFINITE
    return min(_key_degree(k) for k in p._c)


def initial_form(p: TriPoly) -> TriPoly:
    if not p._c:
        raise ZeroPolynomialError("the zero polynomial has no initial form")
    n = order(p)
    return TriPoly._from_raw({k: v for k, v in p._c.items() if _key_degree(k) == n}, p._d)


def substitute(p: TriPoly, sub: Mapping[str, TriPoly]) -> TriPoly:
    """Compose ``p`` with the images given for ``"X"``, ``"Y"``, ``"Z"``.

    Variables missing from ``sub`` map to themselves.
    """
    unknown = set(sub) - {"X", "Y", "Z"}
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)}")
    if not p._c:
        return ZERO
    kern = _backend.active
    images = [_coerce(sub.get(v, ident)) for v, ident in zip("XYZ", (X, Y, Z))]
    exps = [(unpack(key), c) for key, c in p._c.items()]
    top = [max(e[t] for e, _ in exps) for t in range(3)]
    dens = [img._d for img in images]
    powers = [[{0: 1}] for _ in range(3)]

    def power(t, e):
        pw = powers[t]
        while len(pw) <= e:
            pw.append(kern.mul(pw[-1], images[t]._c))
        return pw[e]

    yz = {}
    acc = {}
    for (i, j, k), c in exps:
        m = yz.get((j, k))
        if m is None:
            m = yz[(j, k)] = kern.mul(power(1, j), power(2, k))
        m = kern.mul(power(0, i), m)
        scale = c * dens[0] ** (top[0] - i) * dens[1] ** (top[1] - j) * dens[2] ** (top[2] - k)
        kern.addmul(acc, m, scale)
    den = p._d * dens[0] ** top[0] * dens[1] ** top[1] * dens[2] ** top[2]
    return TriPoly._from_raw(acc, den)


def divide_monomial_exact(p: TriPoly, m: tuple[int, int, int]) -> TriPoly:
    mi, mj, mk = m
    key = pack(mi, mj, mk)
    for k in p._c:
        i, j, kk = unpack(k)
        if i < mi or j < mj or kk < mk:
            raise NonDivisibleError((i, j, kk))
    return TriPoly._from_raw({k - key: v for k, v in p._c.items()}, p._d)


# -- surfaces -------------------------------------------------------------


def levels_of(p: TriPoly, n: int) -> tuple[TriPoly, ...]:
    """The coefficients a_0, ..., a_{n-1} of Z^k in ``p``."""
    return tuple(p.level(k) for k in range(n))


def is_x_regular(a: TriPoly) -> bool:
    """True when ``a`` contains the pure power X^order(a)."""
    if a.is_zero():
        return True
    return a.coefficient(order(a), 0, 0) != 0


@dataclass(frozen=True)
class Surface:
    """A validated Weierstrass equation Z^n + sum a_k(X, Y) Z^k."""

    poly: TriPoly
    n: int
    levels: tuple
    nu: tuple
    is_wt: bool
    is_gwt: bool

    @property
    def initial_form(self) -> TriPoly:
        return initial_form(self.poly)

    @property
    def plane_cone(self) -> bool:
        """The tangent cone is the plane Z = 0 (initial form is Z^n)."""
        return self.initial_form == Z**self.n

    def __str__(self):
        return format_poly(self.poly)


def as_surface(p: TriPoly) -> Surface:
    if p.is_zero():
        raise NotWeierstrassError("zero polynomial")
    n = order(p)
    zdeg = p.z_degree()
    if zdeg != n:
        raise NotWeierstrassError(f"Z-degree {zdeg} differs from order {n}")
    if n < 1:
        raise NotWeierstrassError("multiplicity must be positive")
    if p.level(n) != ONE:
        raise NotWeierstrassError("coefficient of Z^n must be exactly 1")
    levels = levels_of(p, n)
    nu = tuple(order(a) for a in levels)
    for k, v in enumerate(nu):
        if v < n - k:
            raise NotWeierstrassError(f"order of a_{k} is {v} < {n - k}")
    is_wt = levels[n - 1].is_zero()
    is_gwt = is_wt and all(is_x_regular(a) for a in levels)
    return Surface(p, n, levels, nu, is_wt, is_gwt)


# -- text format ----------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: TriPoly) -> str:
    """Canonical text: deterministic term order, rationals as p/q."""
    if p.is_zero():
        return "0"
    out = []
    for (i, j, k), c in p.items():
        factors = [
            f"{v}^{e}" if e > 1 else v for v, e in zip("XYZ", (i, j, k)) if e
        ]
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class _Parser:
    def __init__(self, text):
        self.s = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.s) and self.s[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def fail(self, msg):
        raise PolyParseError(msg, len(self.s[: self.pos].encode()))

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.s) and self.s[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.s[start : self.pos])

    def expr(self):
        ch = self.peek()
        sign = 1
        if ch in "+-":
            self.pos += 1
            sign = -1 if ch == "-" else 1
        value = self.term() * sign
        while True:
            ch = self.peek()
            if ch not in ("+", "-") or not ch:
                return value
            self.pos += 1
            t = self.term()
            value = value + t if ch == "+" else value - t

    def term(self):
        value = self.power()
        while True:
            ch = self.peek()
            if ch == "*" and self.s[self.pos : self.pos + 2] != "**":
                self.pos += 1
                value = value * self.power()
            elif ch == "/":
                self.pos += 1
                self.skip()
                where = self.pos
                divisor = self.power()
                if not divisor.is_constant() or divisor.is_zero():
                    self.pos = where
                    self.fail("divisor must be a nonzero constant")
                value = value / divisor.coefficient(0, 0, 0)
            elif ch and (ch in "XYZxyz(" or ch.isdigit()):
                value = value * self.power()
            else:
                return value

    def power(self):
        base = self.atom()
        ch = self.peek()
        if ch == "^":
            self.pos += 1
            return base ** self.integer()
        if self.s[self.pos : self.pos + 2] == "**":
            self.pos += 2
            return base ** self.integer()
        return base

    def atom(self):
        ch = self.peek()
        if not ch:
            self.fail("unexpected end of input")
        if ch.isdigit():
            return TriPoly.const(self.integer())
        if ch in "XYZxyz":
            self.pos += 1
            return {"X": X, "Y": Y, "Z": Z}[ch.upper()]
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return value
        self.fail(f"unexpected character {ch!r}")


def parse_poly(text: str) -> TriPoly:
    """Parse a polynomial such as ``"Z^5 + X^2*Y*Z^3 + 3/2*X^3*Y^3"``.

    Accepts integer and ``p/q`` coefficients, optional ``*`` between
    factors, ``^`` (or ``**``) with integer exponents and parentheses.
    Errors carry the byte offset of the problem.
    """
    parser = _Parser(text)
    if not parser.peek():
        parser.fail("empty expression")
    value = parser.expr()
    if parser.peek():
        parser.fail(f"unexpected character {parser.peek()!r}")
    return value
