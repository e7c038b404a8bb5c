"""The compiled and pure-Python kernels must agree on every input."""

import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from surfres import _backend, _kernels_py
from surfres.algebra import pack

keys = st.builds(pack, st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
packed = st.dictionaries(keys, st.integers(-10**30, 10**30).filter(bool), max_size=8)
coords = st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=12)

backends = [_backend.BACKENDS[name] for name in sorted(_backend.BACKENDS)]


def test_compiled_backend_is_active_when_built():
    if "cython" in _backend.BACKENDS:
        assert _backend.current() == "cython"
    else:
        pytest.skip("compiled kernels not built")


def test_use_switches_and_rejects_unknown():
    previous = _backend.use("python")
    try:
        assert _backend.current() == "python"
        with pytest.raises(ValueError):
            _backend.use("fortran")
    finally:
        _backend.use(previous)


@given(packed, packed)
def test_mul_parity(a, b):
    want = _kernels_py.mul(a, b)
    for k in backends:
        assert k.mul(a, b) == want
    assert all(want.values())


@given(packed, packed, st.integers(-5, 5))
def test_addmul_parity(a, b, scale):
    want = dict(a)
    _kernels_py.addmul(want, b, scale)
    assert all(want.values())
    for k in backends:
        acc = dict(a)
        k.addmul(acc, b, scale)
        assert acc == want


@given(packed, st.integers(0, 4))
def test_power_parity(a, e):
    want = {0: 1}
    for _ in range(e):
        want = _kernels_py.mul(want, a)
    for k in backends:
        assert k.power(a, e) == want


@given(coords)
def test_staircase_parity(pts):
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    want = _kernels_py.staircase(xs, ys)
    for k in backends:
        assert list(k.staircase(xs, ys)) == want


def test_falls_back_without_extension():
    # block the compiled module before the package is imported
    code = (
        "import sys\n"
        "sys.modules['surfres._ckernels'] = None\n"
        "from surfres import _backend\n"
        "from surfres.resolve import worst_case_depth\n"
        "from surfres.algebra import as_surface, parse_poly\n"
        "assert _backend.current() == 'python' and list(_backend.BACKENDS) == ['python']\n"
        "print(worst_case_depth(as_surface(parse_poly('Z^2+X^2+Y^6'))))\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "3"
