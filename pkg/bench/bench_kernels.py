"""Compare the compiled and pure-Python fundamental-identity sweeps.

    python3 bench/bench_kernels.py [--repeat 3] [--quick]

Each row times ``kernels.fi_residuals`` on one structure tensor with both
backends and checks that they return the same residual list.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from fractions import Fraction
from itertools import combinations

from nlie import catalog, kernels


def dense_table(n: int, d: int, density: float, seed: int) -> dict:
    rng = random.Random(seed)
    table = {}
    for key in combinations(range(1, d + 1), n):
        if rng.random() < density:
            table[key] = tuple(Fraction(rng.randint(-3, 3), rng.choice((1, 2))) for _ in range(d))
    return table


def workloads(quick: bool):
    yield "g0(3) catalog", 3, catalog.build_g0(3).algebra
    yield "case1(5,6) catalog", 5, catalog.build_case1(5, 6, Fraction(3, 2)).algebra
    yield "g0(4)+abelian(2) d=12", 4, catalog.ortho_direct_sum(
        [catalog.build_g0(4), catalog.build_abelian(4, 2)]).algebra
    yield "2 x g0(3) d=16", 3, catalog.ortho_direct_sum([catalog.build_g0(3)] * 2).algebra
    yield "dense n=3 d=8", 3, dense_table(3, 8, 1.0, 1)
    if not quick:
        yield "dense n=4 d=10", 4, dense_table(4, 10, 1.0, 2)
        yield "sparse 30% n=4 d=12", 4, dense_table(4, 12, 0.3, 3)


def timed(fn, repeat: int):
    runs, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the two largest dense tables")
    args = ap.parse_args(argv)

    if not kernels.HAVE_EXTENSION:
        print("compiled kernel not built; only the Python backend is available", file=sys.stderr)
    print(f"{'workload':<26}{'tuples':>8}{'python s':>11}{'ext s':>10}{'speedup':>9}{'residuals':>11}")
    for name, n, obj in workloads(args.quick):
        table = obj.table if hasattr(obj, "table") else obj
        d = obj.dim if hasattr(obj, "dim") else max(max(k) for k in table)
        t_py, r_py = timed(lambda: kernels.fi_residuals(n, d, table, workers=1, backend="python"), args.repeat)
        if kernels.HAVE_EXTENSION:
            t_ext, r_ext = timed(lambda: kernels.fi_residuals(n, d, table, workers=1, backend="ext"), args.repeat)
            if r_ext != r_py:
                print(f"MISMATCH on {name}", file=sys.stderr)
                return 1
            ext_col, speed = f"{t_ext:10.3f}", f"{t_py / t_ext:8.1f}x" if t_ext else "      inf"
        else:
            ext_col, speed = f"{'-':>10}", f"{'-':>9}"
        print(f"{name:<26}{len(table):>8}{t_py:11.3f}{ext_col}{speed} {len(r_py):>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
