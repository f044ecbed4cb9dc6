"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times full vertex enumerations (exact and float) and the raw pivot kernel
on random tableaus, once per available backend.
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction
from itertools import product

import numpy as np

from polylrs import FLOAT, RATIONAL, HRep, build_initial_dictionary, find_initial_vertex, kernels, lrs


def hypercube_with_cuts(d: int, cuts: int, seed: int = 0) -> HRep:
    rng = random.Random(seed)
    H, b = [], []
    for i in range(d):
        for sign in (1, -1):
            H.append([sign if j == i else 0 for j in range(d)])
            b.append(2)
    for signs in list(product((-1, 1), repeat=d))[:cuts]:
        H.append([s * rng.randint(1, 3) for s in signs])
        b.append(rng.randint(3, 6))
    return HRep(tuple(tuple(Fraction(x) for x in r) for r in H), tuple(Fraction(x) for x in b))


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def enumeration_case(P: HRep, policy):
    P = P.coerce(policy)
    D = build_initial_dictionary(P, find_initial_vertex(P, policy=policy).vertex, policy)
    return lambda: lrs(D)


def pivot_case(exact: bool, size: int, count: int = 200):
    rng = np.random.default_rng(1)
    base = rng.integers(-5, 6, size=(size, 2 * size)).astype(float) + 0.5
    if exact:
        base = np.vectorize(lambda x: Fraction(x).limit_denominator(4), otypes=[object])(base)

    def run():
        T = base.copy()
        for k in range(count):
            t, s = k % size, (k * 7) % (2 * size - 1)
            if T[t, s] != 0:
                kernels.pivot_inplace(T, t, s, 0.0 if exact else 1e-14)

    return run


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = {
        "lrs 5-cube + 12 cuts, rational": enumeration_case(hypercube_with_cuts(5, 12), RATIONAL),
        "lrs 6-cube + 16 cuts, float": enumeration_case(hypercube_with_cuts(6, 16), FLOAT),
        "pivot 40x80, rational (200 pivots)": pivot_case(True, 40),
        "pivot 200x400, float (200 pivots)": pivot_case(False, 200),
    }
    backends = kernels.available_backends()
    print(f"{'case':<38}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in cases.items():
        row = []
        for b in backends:
            with kernels.using_backend(b):
                row.append(best_of(fn, args.repeat))
        line = f"{name:<38}" + "".join(f"{t:>11.4f}s" for t in row)
        if len(row) > 1:
            line += f"{row[0] / row[1]:>11.2f}x"
        print(line)


if __name__ == "__main__":
    main()
