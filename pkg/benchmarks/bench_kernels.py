"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one row per workload with the best wall time of each backend and
the speedup. Results are also checked for equality.
"""
import argparse
import time
from itertools import permutations

from qbalg import fixture, kernels


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def workloads(quick):
    ex1 = fixture("example1")
    n5 = 4 if quick else 5
    sets4 = list(kernels.BACKENDS["python"].quantum_binomial_search(4))
    perms4 = list(permutations(range(4)))
    perms5 = list(permutations(range(5)))
    return [
        (f"search n={n5}", lambda k: list(k.quantum_binomial_search(n5))),
        ("orbits example1 m=5", lambda k: k.orbit_labels(ex1.rmap, 5, 5)),
        ("orbits example1 m=6" if not quick else "orbits example1 m=4",
         lambda k: k.orbit_labels(ex1.rmap, 5, 4 if quick else 6)),
        ("braid, 140 sets n=4", lambda k: [k.braid_holds(r, 4) for r in sets4]),
        ("canonical, 140 sets n=4",
         lambda k: [tuple(k.canonical_form(r, 4, perms4)) for r in sets4]),
        ("canonical example1 x200",
         lambda k: [tuple(k.canonical_form(ex1.rmap, 5, perms5)) for _ in range(200)]),
    ]


def _norm(x):
    if isinstance(x, tuple) and len(x) == 2 and not isinstance(x[0], int):
        return (list(x[0]), list(x[1]))
    if isinstance(x, list):
        return [_norm(v) for v in x]
    return x


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    py = kernels.BACKENDS["python"]
    comp = kernels.BACKENDS.get("compiled")
    if comp is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'workload':28} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads(args.quick):
        tp, out_p = best_of(lambda: fn(py), args.repeat)
        if comp is None:
            print(f"{name:28} {tp:10.4f} {'-':>11} {'-':>8}")
            continue
        tc, out_c = best_of(lambda: fn(comp), args.repeat)
        if _norm(out_p) != _norm(out_c):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:28} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
