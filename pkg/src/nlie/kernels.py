"""Backend selection for the fundamental-identity sweep.

The compiled extension ``nlie._kernels`` is used when it imported and the
scaled integer table is small enough for int64; otherwise the pure-Python
sweep runs.  ``NLK_BACKEND=python`` forces the fallback and
``NLK_WORKERS=k`` splits the x-side tuples across k processes.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _ext
except ImportError:  # extension not built
    _ext = None

log = logging.getLogger(__name__)

HAVE_EXTENSION = _ext is not None
_INT64_BUDGET = 2**62


def default_backend() -> str:
    forced = os.environ.get("NLK_BACKEND", "").strip().lower()
    if forced in ("python", "py"):
        return "python"
    if forced in ("ext", "cython") and not HAVE_EXTENSION:
        raise RuntimeError("NLK_BACKEND requests the compiled kernel but it is not built")
    return "ext" if HAVE_EXTENSION else "python"


def default_workers() -> int:
    raw = os.environ.get("NLK_WORKERS", "1")
    try:
        w = int(raw)
    except ValueError:
        raise ValueError(f"NLK_WORKERS must be an integer >= 1, got {raw!r}") from None
    if w < 1:
        raise ValueError(f"NLK_WORKERS must be an integer >= 1, got {w}")
    return w


def integer_table(table: dict) -> tuple[dict, int]:
    """Scale a 1-based rational table to a 0-based sparse integer table.

    Returns ``(int_table, L)`` with every constant multiplied by ``L``.
    """
    den = 1
    for v in table.values():
        for c in v:
            if c:
                den = math.lcm(den, Fraction(c).denominator)
    out = {}
    for key, v in table.items():
        sv = {k: int(c * den) for k, c in enumerate(v) if c}
        if sv:
            out[tuple(i - 1 for i in key)] = sv
    return out, den


def _binom_table(d: int, n: int) -> np.ndarray:
    b = np.zeros((d + 1, n + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(n + 1):
            b[i, j] = math.comb(i, j)
    return b


def _colex_rank(t, binom) -> int:
    return int(sum(binom[v, i + 1] for i, v in enumerate(t)))


def _run_ext(int_table: dict, n: int, d: int, xs: list) -> list:
    binom = _binom_table(d, n)
    coef = np.zeros((math.comb(d, n), d), dtype=np.int64)
    for key, sv in int_table.items():
        r = _colex_rank(key, binom)
        for k, c in sv.items():
            coef[r, k] = c
    ys = list(combinations(range(d), n - 1))
    xs_arr = np.array(xs, dtype=np.int64).reshape(len(xs), n)
    ys_arr = np.array(ys, dtype=np.int64).reshape(len(ys), n - 1)
    raw = _ext.fi_sweep(coef, n, d, xs_arr, ys_arr, binom)
    out = []
    for ix, iy, res in raw:
        out.append((xs[ix], ys[iy], {k: v for k, v in enumerate(res.tolist()) if v}))
    out.sort(key=lambda r: (r[0], r[1]))
    return out


def _run_py(int_table: dict, n: int, d: int, xs: list) -> list:
    return _kernels_py.fi_sweep(int_table, n, d, set(xs))


def _run(backend: str, int_table: dict, n: int, d: int, xs: list) -> list:
    if backend == "ext":
        return _run_ext(int_table, n, d, xs)
    return _run_py(int_table, n, d, xs)


def fits_int64(int_table: dict, n: int, d: int) -> bool:
    m = max((abs(c) for v in int_table.values() for c in v.values()), default=0)
    return (n + 1) * d * m * m < _INT64_BUDGET


def fi_residuals(n: int, d: int, table: dict, workers: int | None = None,
                 backend: str | None = None) -> list:
    """All nonzero fundamental-identity residuals over basis tuples.

    ``table`` maps sorted 1-based n-tuples to rational coefficient vectors.
    Returns ``[(x, y, residual_vec)]`` with 1-based index tuples, sorted by
    (x, y); identical for every backend and worker count.
    """
    if d < n or not table:
        return []
    int_table, den = integer_table(table)
    if not int_table:
        return []
    backend = backend or default_backend()
    if backend == "ext" and not fits_int64(int_table, n, d):
        log.info("structure constants too large for int64 kernel; using Python sweep")
        backend = "python"
    workers = workers or default_workers()

    xs = list(combinations(range(d), n))
    if workers == 1 or len(xs) < 2 * workers:
        raw = _run(backend, int_table, n, d, xs)
    else:
        size = -(-len(xs) // workers)
        chunks = [xs[i:i + size] for i in range(0, len(xs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run, [backend] * len(chunks), [int_table] * len(chunks),
                             [n] * len(chunks), [d] * len(chunks), chunks)
            raw = [r for part in parts for r in part]
        raw.sort(key=lambda r: (r[0], r[1]))

    den2 = den * den
    zero = Fraction(0)
    out = []
    for x, y, res in raw:
        vecr = [zero] * d
        for k, v in res.items():
            vecr[k] = Fraction(v, den2)
        out.append((tuple(i + 1 for i in x), tuple(i + 1 for i in y), tuple(vecr)))
    return out
