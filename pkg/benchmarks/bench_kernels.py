"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload runs under both backends; the ratio column is
python time / cython time.
"""

import argparse
import random
import timeit

from surfres import _backend
from surfres.acceptance import random_wt
from surfres.algebra import X, Y, Z, as_surface, parse_poly, substitute
from surfres.newton import staircase_hull
from surfres.resolve import worst_case_depth
from surfres.transform import Direction, quadratic


def _workloads():
    big = parse_poly("Z^4+(Y-X)^4*Z^2+(Y+3X)^8")
    rng = random.Random(1)
    surfaces = [random_wt(rng, max_degree=10) for _ in range(30)]
    pts = [(rng.randint(0, 400), rng.randint(0, 400)) for _ in range(3000)]
    family = [as_surface(parse_poly(f"Z^2+X^2+Y^{2 * r}")) for r in range(2, 7)]
    return {
        "power (X+2Y-Z)^30": lambda: (X + 2 * Y - Z) ** 30,
        "substitute Y->Y+X+X^2": lambda: substitute(big, {"Y": Y + X + X**2}),
        "quadratic (1:1:0) x30": lambda: [quadratic(s, Direction.of(1, 1, 0)) for s in surfaces],
        "staircase 3000 points": lambda: staircase_hull(pts),
        "worst depth Z^2+X^2+Y^2r": lambda: [worst_case_depth(s) for s in family],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = [b for b in ("python", "cython") if b in _backend.BACKENDS]
    if len(names) < 2:
        print("compiled kernels are not built; only the python backend is timed")
    work = _workloads()
    previous = _backend.current()
    print(f"{'workload':<28}" + "".join(f"{n:>12}" for n in names) + "       ratio")
    try:
        for label, fn in work.items():
            times = []
            for name in names:
                _backend.use(name)
                times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
            ratio = f"{times[0] / times[-1]:10.2f}x" if len(times) == 2 else ""
            print(f"{label:<28}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + ratio)
    finally:
        _backend.use(previous)


if __name__ == "__main__":
    main()
