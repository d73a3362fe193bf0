"""Compare the compiled and pure-Python cycle kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from pentagon import _backend, zoo
from pentagon.graph import Graph
from pentagon.operator import cycle_operator

CASES = [
    ("dodecahedron", lambda: zoo.dodecahedron(), 5),
    ("petersen k=6", lambda: zoo.petersen(), 6),
    ("C5^3(I1)", lambda: _iterate(zoo.i1_paper(), 3), 5),
    ("C5^2(I3)", lambda: _iterate(zoo.hatted_icosahedron(3), 2), 5),
    ("G(40, 0.15)", lambda: _random(40, 0.15), 6),
]


def _iterate(g, steps):
    for _ in range(steps):
        g = cycle_operator(g).output
    return g


def _random(n, p, seed=1):
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _backend.available()
    print(f"{'case':<14} {'order':>6} {'cycles':>8} " + " ".join(f"{b + ' ms':>12}" for b in backends) + "  speedup")
    for name, build, k in CASES:
        g = build()
        ms = {}
        n_out = None
        for b in backends:
            ms[b] = 1000 * best_of(lambda: cycle_operator(g, k, backend=b), args.repeat)
            n_out = cycle_operator(g, k, backend=b).output.order
        speed = f"{ms['python'] / ms['cython']:7.1f}x" if "cython" in ms else "      -"
        print(f"{name:<14} {g.order:>6} {n_out:>8} " + " ".join(f"{ms[b]:>12.2f}" for b in backends) + "  " + speed)

    print("\nenumeration kernel only (count, no materialization)")
    big = _iterate(zoo.i1_paper(), 4)
    for b in backends:
        start = time.perf_counter()
        _, count, _ = _backend.induced_cycles(big, 5, backend=b, count_only=True)
        print(f"  C5^4(I1) order {big.order}: {count} induced 5-cycles, {b} {time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    main()
