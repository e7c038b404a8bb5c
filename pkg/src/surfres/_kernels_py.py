"""Pure-Python kernels for sparse integer polynomials and staircase hulls.

Polynomials are ``dict[int, int]`` mapping a packed exponent key to an
integer coefficient.  A key stores ``(i, j, k)`` as
``(i << 40) | (j << 20) | k``, so adding two keys multiplies the monomials.
Exponents must stay below ``2**20``.

This module and the compiled ``_ckernels`` extension expose the same
functions; ``surfres._backend`` picks one at import.
"""

NAME = "python"


def mul(a, b):
    """Product of two packed polynomials."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def addmul(acc, a, scale):
    """In place ``acc += scale * a``; zero coefficients are removed."""
    get = acc.get
    for k, v in a.items():
        s = get(k, 0) + scale * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def shift(a, key, scale):
    """``scale * monomial(key) * a`` for a packed monomial key."""
    return {k + key: v * scale for k, v in a.items()}


def power(a, e):
    result = {0: 1}
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def staircase(xs, ys):
    """Indices of the vertex chain of the hull of quadrant translates.

    ``xs`` and ``ys`` are integer coordinates (points already scaled to a
    common denominator).  The chain is returned left to right: x strictly
    increasing, y strictly decreasing, every interior vertex a strict
    corner.
    """
    order = sorted(range(len(xs)), key=lambda t: (xs[t], ys[t]))
    pareto = []
    best_y = None
    for t in order:
        if best_y is None or ys[t] < best_y:
            pareto.append(t)
            best_y = ys[t]
    chain = []
    for t in pareto:
        while len(chain) >= 2:
            a, b = chain[-2], chain[-1]
            cross = (xs[b] - xs[a]) * (ys[t] - ys[a]) - (ys[b] - ys[a]) * (xs[t] - xs[a])
            if cross > 0:
                break
            chain.pop()
        chain.append(t)
    return chain
