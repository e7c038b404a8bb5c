from fractions import Fraction

import pytest
import sympy
from hypothesis import settings, strategies as st

from surfres import _backend
from surfres.algebra import TriPoly, as_surface, parse_poly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(params=sorted(_backend.BACKENDS))
def backend(request):
    previous = _backend.use(request.param)
    yield request.param
    _backend.use(previous)


def S(text):
    return as_surface(parse_poly(text))


x, y, z = sympy.symbols("x y z")


def to_sympy(p: TriPoly):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * x**i * y**j * z**k for (i, j, k), c in p.terms.items()),
        sympy.Integer(0),
    )


def from_sympy(expr) -> TriPoly:
    poly = sympy.Poly(sympy.expand(expr), x, y, z)
    return TriPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda v: v != 0)
exps = st.tuples(*(st.integers(0, 4),) * 3)
polys = st.dictionaries(exps, coeffs, max_size=6).map(TriPoly)
small_polys = st.dictionaries(st.tuples(*(st.integers(0, 2),) * 3), coeffs, max_size=3).map(TriPoly)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
