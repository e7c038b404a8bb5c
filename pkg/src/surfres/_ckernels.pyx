# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same functions, same results."""

NAME = "cython"


def mul(dict a, dict b):
    cdef dict out = {}
    cdef list bkeys, bvals
    cdef Py_ssize_t t, nb
    cdef object ka, ca, k, v
    if len(a) < len(b):
        a, b = b, a
    bkeys = list(b.keys())
    bvals = list(b.values())
    nb = len(bkeys)
    for ka, ca in a.items():
        for t in range(nb):
            k = ka + bkeys[t]
            v = out.get(k)
            if v is None:
                out[k] = ca * bvals[t]
            else:
                out[k] = v + ca * bvals[t]
    return {k: v for k, v in out.items() if v}


def addmul(dict acc, dict a, scale):
    cdef object k, v, s, old
    for k, v in a.items():
        old = acc.get(k)
        if old is None:
            s = scale * v
        else:
            s = old + scale * v
        if s:
            acc[k] = s
        elif old is not None:
            del acc[k]


def shift(dict a, key, scale):
    cdef object k, v
    return {k + key: v * scale for k, v in a.items()}


def power(dict a, long e):
    cdef dict result = {0: 1}
    cdef dict base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def staircase(list xs, list ys):
    cdef list order = sorted(range(len(xs)), key=lambda u: (xs[u], ys[u]))
    cdef list pareto = []
    cdef list chain = []
    cdef object best_y = None
    cdef Py_ssize_t t, a, b
    cdef object cross
    for t in order:
        if best_y is None or ys[t] < best_y:
            pareto.append(t)
            best_y = ys[t]
    for t in pareto:
        while len(chain) >= 2:
            a = chain[len(chain) - 2]
            b = chain[len(chain) - 1]
            cross = (xs[b] - xs[a]) * (ys[t] - ys[a]) - (ys[b] - ys[a]) * (xs[t] - xs[a])
            if cross > 0:
                break
            chain.pop()
        chain.append(t)
    return chain
