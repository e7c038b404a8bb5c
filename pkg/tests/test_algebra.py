import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import S, coeffs, from_sympy, polys, small_polys, to_sympy, x, y, z
from surfres.algebra import (
    INFINITE,
    ONE,
    X,
    Y,
    Z,
    TriPoly,
    as_surface,
    divide_monomial_exact,
    format_poly,
    initial_form,
    order,
    parse_poly,
    substitute,
)
from surfres.errors import (
    NonDivisibleError,
    NotWeierstrassError,
    PolyParseError,
    ZeroPolynomialError,
)

P = parse_poly


def test_terms_are_normalized():
    p = TriPoly({(1, 0, 0): Fraction(2, 4), (0, 1, 0): 0})
    assert p.terms == {(1, 0, 0): Fraction(1, 2)}
    assert TriPoly({(0, 0, 0): 0}) == TriPoly()


def test_equality_matches_term_maps():
    assert P("X + Y") == P("Y + X")
    assert P("2/4*X") == P("1/2 X")
    assert P("X - X") == TriPoly()
    assert hash(P("X*Y + 1")) == hash(P("1 + Y*X"))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z^3 + X^2*Z + Y^3 - X^4", 3),
        ("Z^5 + X^2*Y*Z^3 + X^3*Y^3", 5),
        ("7", 0),
    ],
)
def test_order(text, expected):
    assert order(P(text)) == expected


def test_order_of_zero_is_infinite():
    assert order(TriPoly()) == INFINITE == math.inf


def test_initial_form():
    assert initial_form(P("Z^3 + X^2*Z + Y^3 - X^4")) == P("Z^3 + X^2*Z + Y^3")
    for n in (3, 4, 5):
        assert initial_form(P(f"Z^{n} + X^{n - 1}*Y^{n - 1}")) == Z**n
    assert initial_form(X) == X
    with pytest.raises(ZeroPolynomialError):
        initial_form(TriPoly())


def test_substitute_examples():
    assert substitute(Z**2, {"Z": X * Z}) == P("X^2*Z^2")
    assert substitute(P("Z^2 - X^3"), {"Z": X * Z}) == P("X^2*Z^2 - X^3")
    assert substitute(P("(Y-X)^4"), {"Y": Y + X}) == Y**4


def test_substitute_rejects_unknown_variable():
    with pytest.raises(ValueError):
        substitute(X, {"W": Y})


@given(small_polys, small_polys, small_polys, small_polys)
def test_substitute_matches_sympy(p, a, b, c):
    got = substitute(p, {"X": a, "Y": b, "Z": c})
    want = to_sympy(p).subs({x: to_sympy(a), y: to_sympy(b), z: to_sympy(c)}, simultaneous=True)
    assert got == from_sympy(want)


@given(polys)
def test_identity_substitution(p):
    assert substitute(p, {}) == p
    assert substitute(p, {"X": X, "Y": Y, "Z": Z}) == p


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert p * q == from_sympy(to_sympy(p) * to_sympy(q))
    assert p + q == from_sympy(to_sympy(p) + to_sympy(q))
    assert p - q == from_sympy(to_sympy(p) - to_sympy(q))
    assert p**3 == from_sympy(to_sympy(p) ** 3)


@given(polys.filter(bool), polys.filter(bool))
def test_order_is_additive(p, q):
    assert order(p * q) == order(p) + order(q)


@given(polys, st.tuples(*(st.integers(0, 3),) * 3))
def test_divide_after_multiply_round_trip(p, m):
    assert divide_monomial_exact(p * TriPoly.monomial(*m), m) == p


def test_divide_monomial_exact():
    assert divide_monomial_exact(P("X^2*Z^2 - X^3"), (2, 0, 0)) == P("Z^2 - X")
    p = P("Z^3 + X*Y")
    assert divide_monomial_exact(p, (0, 0, 0)) == p
    with pytest.raises(NonDivisibleError) as info:
        divide_monomial_exact(P("X^2*Z + Y"), (1, 0, 0))
    assert info.value.term == (0, 1, 0)


def test_as_surface_fig3():
    s = S("Z^5 + X^2*Y*Z^3 + X^3*Y^3")
    assert s.n == 5
    assert s.nu[3] == 3 and s.nu[0] == 6
    assert s.is_wt and s.plane_cone
    # X^2*Y carries no pure power of X, so the equation is WT but not GWT
    assert not s.is_gwt


def test_as_surface_flags():
    s = S("Z^2 + Y^3")
    assert s.n == 2 and s.is_wt and not s.is_gwt
    s = S("Z^2 + X*Z")
    assert not s.is_wt and not s.is_gwt
    assert s.levels[1] == X


@pytest.mark.parametrize(
    "text",
    ["2*Z^2 + X^3", "Z^2 + X", "Z^2 + X*Z^2 + X^3", "Z^3 + Y*Z^4", "1", "0", "X^2 + Y^2"],
)
def test_as_surface_rejects(text):
    with pytest.raises(NotWeierstrassError):
        S(text)


@given(polys)
def test_surface_terms_respect_weierstrass_bound(p):
    q = Z**4 + TriPoly({(i, j, k): c for (i, j, k), c in p.terms.items() if k < 4 and i + j >= 4 - k})
    s = as_surface(q)
    assert order(s.poly) == s.n == 4
    assert all(i + j >= s.n - k for i, j, k in s.poly.exponents())


def test_format_canonical_order():
    p = P("X^3*Y^3 + X^2*Y*Z^3 + Z^5")
    assert format_poly(p) == "Z^5 + X^2*Y*Z^3 + X^3*Y^3"
    assert format_poly(P("-3/2*X + Y^2 - 1")) == "-1 + Y^2 - 3/2*X"
    assert format_poly(TriPoly()) == "0"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3X", 3 * X),
        ("3/2 X^2", Fraction(3, 2) * X**2),
        ("X**2*Y", X**2 * Y),
        ("-(X - Y)^2", -((X - Y) ** 2)),
        ("  Z ^ 2  +  x y ", Z**2 + X * Y),
        ("X^2/4", X**2 / 4),
        ("2(X+1)Y", 2 * (X + ONE) * Y),
    ],
)
def test_parse_variants(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "text, offset",
    [("X + * Y", 4), ("", 0), ("X^", 2), ("(X + Y", 6), ("X / Y", 4), ("X $ 2", 2), ("X / 0", 4)],
)
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(PolyParseError) as info:
        parse_poly(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


@given(polys)
def test_print_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@given(polys, coeffs)
def test_scalar_division(p, c):
    assert (p / c) * c == p


def test_derivative_and_evaluate():
    p = P("X^2*Y + 3*Z")
    assert p.derivative("X") == P("2*X*Y")
    assert p.derivative("Z") == P("3")
    assert p.evaluate(2, 3, 1) == 15


@given(polys)
def test_scaling_by_zero_gives_zero(p):
    assert (p * 0).is_zero() and (0 * p) == TriPoly()
    assert (p * 0).terms == {}
