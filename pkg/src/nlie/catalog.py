"""Builders for the metric n-Lie algebra families of the classification.

Every builder returns a :class:`~nlie.metric.MetricAlgebra` whose status
flags were set by actually running the checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, direct_sum
from .errors import ParameterError
from .linalg import Mat
from .metric import Form, MetricAlgebra, block_form, verify

FAMILIES = ("abelian", "simple", "g0", "case1", "case2", "case3", "ortho_sum")


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int
    k: int | None = None
    l: int | None = None
    d: int | None = None
    a: Fraction | None = None
    c: Fraction | None = None
    lam: Fraction | None = None
    mu: Fraction | None = None


def _labels(prefix: str, count: int, start: int = 1) -> list[str]:
    return [f"{prefix}{i}" for i in range(start, start + count)]


def _gram(d: int, entries: dict) -> Form:
    g = [[Fraction(0)] * d for _ in range(d)]
    for (i, j), v in entries.items():
        g[i - 1][j - 1] = g[j - 1][i - 1] = Fraction(v)
    return Form(d, Mat(tuple(tuple(r) for r in g), d))


def _check_arity(n: int) -> None:
    if n < 2:
        raise ParameterError(f"arity must be >= 2, got {n}")


def _check_k(n: int, k: int) -> None:
    if not 2 <= k <= n + 1:
        raise ParameterError(f"need 2 <= k <= n+1, got n={n}, k={k}")


def _nonzero(name: str, v) -> Fraction:
    v = Fraction(v)
    if v == 0:
        raise ParameterError(f"{name} must be nonzero")
    return v


def build_abelian(n: int, d: int, gram=None, workers: int | None = None) -> MetricAlgebra:
    _check_arity(n)
    if d < 0:
        raise ParameterError("dimension must be >= 0")
    B = Form.identity(d) if gram is None else Form(d, gram if isinstance(gram, Mat) else Mat.from_rows(gram, d))
    if not B.is_symmetric() or not B.is_nondegenerate():
        raise ParameterError("gram must be symmetric and nondegenerate")
    A = Algebra(n, d, {}, tuple(_labels("e", d)))
    return verify(A, B, workers=workers)


def simple_algebra(n: int, c) -> Algebra:
    """[e_1, ..., ê_r, ..., e_{n+1}] = (-1)^{r+1} c e_r."""
    c = _nonzero("c", c)
    N = n + 1
    br = []
    for r in range(1, N + 1):
        args = tuple(t for t in range(1, N + 1) if t != r)
        br.append((args, {r: (-1) ** (r + 1) * c}))
    return Algebra.from_brackets(n, N, br, _labels("e", N))


def build_simple(n: int, c=1, workers: int | None = None) -> MetricAlgebra:
    _check_arity(n)
    return verify(simple_algebra(n, c), Form.identity(n + 1), workers=workers)


def build_g0(n: int, lam=1, mu=1, workers: int | None = None) -> MetricAlgebra:
    """Simple algebra on x_1..x_{n+1} extended by its regular module y_1..y_{n+1}.

    [x_1..x̂_i..x_{n+1}] = (-1)^i x_i and, for i < j, the y-brackets are the
    images of the x-brackets under y_t -> x_t:
    [x..x̂_i..x̂_j.., y_j] = (-1)^(n-j+i+1) y_i, [x..x̂_i..x̂_j.., y_i] = (-1)^(n-i+j) y_j.
    Gram: B(x_i, x_i) = lam, B(x_i, y_i) = mu, B(y, y) = 0.
    """
    _check_arity(n)
    lam, mu = Fraction(lam), Fraction(mu)
    if lam * mu == 0:
        raise ParameterError("need lam * mu != 0")
    N = n + 1
    d = 2 * N
    br = []
    for i in range(1, N + 1):
        br.append((tuple(t for t in range(1, N + 1) if t != i), {i: (-1) ** i}))
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            base = tuple(t for t in range(1, N + 1) if t not in (i, j))
            br.append((base + (N + j,), {N + i: (-1) ** (n - j + i + 1)}))
            br.append((base + (N + i,), {N + j: (-1) ** (n - i + j)}))
    A = Algebra.from_brackets(n, d, br, _labels("x", N) + _labels("y", N))
    entries = {}
    for i in range(1, N + 1):
        entries[(i, i)] = lam
        entries[(i, N + i)] = mu
    return verify(A, _gram(d, entries), workers=workers)


def case1_algebra(n: int, k: int, a) -> tuple[Algebra, Form]:
    a = _nonzero("a", a)
    d = n + k
    br = []
    tail = tuple(range(n + 2, n + k + 1))
    for i in range(k, n + 2):
        args = tuple(t for t in range(k, n + 2) if t != i) + tail
        br.append((args, {i: (-1) ** (n + i) * a}))
    for r in range(1, k):
        args = tuple(range(k, n + 2)) + tuple(t for t in tail if t != n + 1 + r)
        br.append((args, {r: (-1) ** (r + 1) * a}))
    entries = {}
    for r in range(1, k):
        entries[(r, n + 1 + r)] = 1
    for i in range(k, n + 2):
        entries[(i, i)] = 1
    return Algebra.from_brackets(n, d, br, _labels("e", d)), _gram(d, entries)


def build_case1(n: int, k: int, a=1, workers: int | None = None) -> MetricAlgebra:
    """Isotropic-center family: center e_1..e_{k-1}, derived algebra e_1..e_{n+1}."""
    _check_arity(n)
    _check_k(n, k)
    A, B = case1_algebra(n, k, a)
    return verify(A, B, workers=workers)


def _abelian_block(n: int, m: int, prefix: str) -> tuple[Algebra, Form]:
    return Algebra(n, m, {}, tuple(_labels(prefix, m))), Form.identity(m)


def build_case2(n: int, k: int, c=1, workers: int | None = None) -> MetricAlgebra:
    """Reductive family: (k-1)-dim central block x ⊕ simple algebra e, identity Gram."""
    _check_arity(n)
    _check_k(n, k)
    Z, BZ = _abelian_block(n, k - 1, "x")
    S = simple_algebra(n, c)
    return verify(direct_sum([Z, S]), block_form([BZ, Form.identity(n + 1)]), workers=workers)


def build_case3(n: int, k: int, l: int, a=1, workers: int | None = None) -> MetricAlgebra:
    """Mixed family: l-dim central block x ⊕ case-1 algebra with k - l in place of k."""
    _check_arity(n)
    _check_k(n, k)
    if not 1 <= l < k - 1:
        raise ParameterError(f"need 1 <= l < k-1, got k={k}, l={l}")
    Z, BZ = _abelian_block(n, l, "x")
    A1, B1 = case1_algebra(n, k - l, a)
    return verify(direct_sum([Z, A1]), block_form([BZ, B1]), workers=workers)


def ortho_direct_sum(parts: Sequence[MetricAlgebra], workers: int | None = None) -> MetricAlgebra:
    if not parts:
        raise ParameterError("need at least one summand")
    n = parts[0].arity
    if any(p.arity != n for p in parts):
        raise ParameterError("summands must share the arity")
    algs = []
    multi = len(parts) > 1
    for idx, p in enumerate(parts, 1):
        A = p.algebra
        labels = A.labels or tuple(_labels("e", A.dim))
        if multi:
            labels = tuple(f"{lbl}.{idx}" for lbl in labels)
        algs.append(Algebra(A.arity, A.dim, A.table, labels))
    return verify(direct_sum(algs), block_form([p.form for p in parts]), workers=workers)


def build(params: FamilyParams, workers: int | None = None) -> MetricAlgebra:
    """Dispatch on ``params.family`` (ortho_sum is not buildable from scalars alone)."""
    p = params
    f = p.family
    if f == "abelian":
        if p.d is None:
            raise ParameterError("abelian needs d")
        return build_abelian(p.n, p.d, workers=workers)
    if f == "simple":
        return build_simple(p.n, 1 if p.c is None else p.c, workers=workers)
    if f == "g0":
        return build_g0(p.n, 1 if p.lam is None else p.lam, 1 if p.mu is None else p.mu, workers=workers)
    if f == "case1":
        return build_case1(p.n, _need(p.k, "k"), 1 if p.a is None else p.a, workers=workers)
    if f == "case2":
        return build_case2(p.n, _need(p.k, "k"), 1 if p.c is None else p.c, workers=workers)
    if f == "case3":
        return build_case3(p.n, _need(p.k, "k"), _need(p.l, "l"), 1 if p.a is None else p.a,
                           workers=workers)
    raise ParameterError(f"unknown or non-scalar family {f!r}")


def _need(v, name):
    if v is None:
        raise ParameterError(f"missing parameter {name}")
    return v
