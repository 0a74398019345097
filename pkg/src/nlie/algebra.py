"""n-Lie algebras given by structure constants.

An :class:`Algebra` stores one coefficient vector per strictly increasing
n-tuple of 1-based basis indices; every other bracket of basis vectors
follows by antisymmetry.  Nothing here assumes the fundamental identity:
:func:`check_fundamental_identity` reports it, so invalid tables can be
built and inspected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from . import kernels
from ._kernels_py import sort_signed
from .errors import DimensionMismatch, NotAnIdeal, NotASubalgebra, ParameterError
from .linalg import (
    ZERO,
    Mat,
    Subspace,
    Vec,
    det,
    full_space,
    is_subspace,
    nullspace_rows,
    reduce_mod,
    solve,
    span,
    unit,
    vec,
    zero_space,
    zero_vec,
)


@dataclass(frozen=True)
class Witness:
    indices: tuple  # tuple of 1-based index tuples
    residual: object  # Vec or Fraction


@dataclass(frozen=True)
class ViolationReport:
    kind: str  # fundamental_identity | invariance | symmetry | nondegeneracy
    witnesses: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.witnesses


@dataclass(frozen=True, eq=True)
class Algebra:
    """Structure tensor of an n-ary antisymmetric bracket on Q^dim."""

    arity: int
    dim: int
    table: Mapping = field(default_factory=dict)
    labels: tuple | None = None

    def __post_init__(self):
        if self.arity < 2:
            raise ParameterError(f"arity must be >= 2, got {self.arity}")
        if self.dim < 0:
            raise ParameterError("dimension must be >= 0")
        if self.labels is not None and len(self.labels) != self.dim:
            raise ParameterError("one label per basis vector")
        for key, v in self.table.items():
            if len(key) != self.arity or any(b <= a for a, b in zip(key, key[1:])):
                raise ParameterError(f"bracket key {key} is not a strictly increasing {self.arity}-tuple")
            if key[0] < 1 or key[-1] > self.dim:
                raise ParameterError(f"bracket key {key} outside 1..{self.dim}")
            if len(v) != self.dim:
                raise DimensionMismatch(f"bracket value for {key} has length {len(v)}")

    @classmethod
    def from_brackets(cls, arity: int, dim: int, brackets, labels=None) -> "Algebra":
        """Build from ``{args: value}`` or ``[(args, value)]`` pairs.

        ``args`` may be in any order; they are sorted and the value signed
        accordingly.  Values may be full vectors or sparse ``{index: coeff}``
        mappings (1-based).  Zero values are dropped.
        """
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        table: dict = {}
        for args, value in items:
            if isinstance(value, Mapping):
                v = [ZERO] * dim
                for k, c in value.items():
                    if not 1 <= k <= dim:
                        raise ParameterError(f"coefficient index {k} outside 1..{dim}")
                    v[k - 1] = Fraction(c)
                v = tuple(v)
            else:
                v = vec(value)
            if len(args) != arity:
                raise ParameterError(f"bracket {tuple(args)} does not have {arity} arguments")
            s = sort_signed(args)
            if s is None:
                if any(v):
                    raise ParameterError(f"repeated argument in {tuple(args)} with nonzero value")
                continue
            sign, key = s
            if key in table:
                raise ParameterError(f"bracket {key} given twice")
            if any(v):
                table[key] = v if sign > 0 else tuple(-c for c in v)
        return cls(arity, dim, table, tuple(labels) if labels is not None else None)

    @classmethod
    def abelian(cls, arity: int, dim: int) -> "Algebra":
        return cls(arity, dim, {})

    @property
    def is_abelian(self) -> bool:
        return not self.table

    def basis_bracket(self, idx: Sequence[int]) -> Vec:
        """[e_i1, ..., e_in] for 1-based indices in any order."""
        s = sort_signed(idx)
        if s is None:
            return zero_vec(self.dim)
        v = self.table.get(s[1])
        if v is None:
            return zero_vec(self.dim)
        return v if s[0] > 0 else tuple(-c for c in v)


def _check_args(A: Algebra, vs) -> None:
    if len(vs) != A.arity:
        raise DimensionMismatch(f"{A.arity}-ary bracket given {len(vs)} arguments")
    for v in vs:
        if len(v) != A.dim:
            raise DimensionMismatch(f"argument of length {len(v)} in a {A.dim}-dimensional algebra")


def bracket(A: Algebra, *vs) -> Vec:
    """Multilinear bracket of arbitrary vectors."""
    _check_args(A, vs)
    d = A.dim
    out = [ZERO] * d
    if not A.table:
        return tuple(out)
    supports = [[j for j, x in enumerate(v) if x] for v in vs]
    if any(not s for s in supports):
        return tuple(out)
    n = A.arity
    if math.prod(len(s) for s in supports) <= len(A.table) * n * n:
        for combo in product(*supports):
            s = sort_signed(combo)
            if s is None:
                continue
            c = A.table.get(tuple(i + 1 for i in s[1]))
            if c is None:
                continue
            w = Fraction(s[0])
            for v, i in zip(vs, combo):
                w *= v[i]
            for k, x in enumerate(c):
                if x:
                    out[k] += w * x
    else:
        # Sum over stored tuples t of det(v_j[t_i]) * c_t.
        for key, c in A.table.items():
            cols = [k - 1 for k in key]
            w = det([[v[i] for i in cols] for v in vs])
            if w:
                for k, x in enumerate(c):
                    if x:
                        out[k] += w * x
    return tuple(out)


def check_fundamental_identity(A: Algebra, workers: int | None = None,
                               backend: str | None = None) -> ViolationReport:
    """Sweep the fundamental identity over all basis tuples.

    Witness indices are ``(x_tuple, y_tuple)``; the residual is
    LHS - RHS at those basis vectors.  Checking basis tuples suffices by
    multilinearity.
    """
    res = kernels.fi_residuals(A.arity, A.dim, A.table, workers=workers, backend=backend)
    return ViolationReport(
        "fundamental_identity",
        tuple(Witness((x, y), r) for x, y, r in res),
    )


# --------------------------------------------------------------------------
# structural subspaces
# --------------------------------------------------------------------------


def _same_dim(A: Algebra, *spaces: Subspace) -> None:
    for W in spaces:
        if W.ambient_dim != A.dim:
            raise DimensionMismatch(f"subspace of Q^{W.ambient_dim} in a {A.dim}-dimensional algebra")


def bracket_span(A: Algebra, *spaces: Subspace) -> Subspace:
    """Span of all brackets with the i-th argument drawn from spaces[i]."""
    if len(spaces) != A.arity:
        raise DimensionMismatch(f"{A.arity}-ary bracket given {len(spaces)} subspaces")
    _same_dim(A, *spaces)
    d = A.dim
    if not A.table:
        return zero_space(d)
    if all(W.is_full() for W in spaces):
        return span(A.table.values(), d)
    # Slots holding the same subspace are antisymmetric, so distinct sorted
    # basis choices within each group suffice.
    groups: dict = {}
    for W in spaces:
        groups.setdefault(W, 0)
        groups[W] += 1
    choices = []
    for W, count in groups.items():
        if count > W.dim:
            return zero_space(d)
        choices.append(list(combinations(W.basis, count)))
    vals = []
    for pick in product(*choices):
        args = [v for part in pick for v in part]
        b = bracket(A, *args)
        if any(b):
            vals.append(b)
    return span(vals, d)


def derived_algebra(A: Algebra) -> Subspace:
    return bracket_span(A, *([full_space(A.dim)] * A.arity))


def is_perfect(A: Algebra) -> bool:
    return derived_algebra(A).is_full()


def derived_series(A: Algebra, I: Subspace | None = None) -> list[Subspace]:
    """[I, I^(1), I^(2), ...] up to and including the first repeated term."""
    I = full_space(A.dim) if I is None else I
    _same_dim(A, I)
    series = [I]
    while True:
        nxt = bracket_span(A, *([series[-1]] * A.arity))
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.is_zero():
            return series


def is_solvable(A: Algebra, I: Subspace | None = None) -> bool:
    return derived_series(A, I)[-1].is_zero()


def centralizer(A: Algebra, W: Subspace) -> Subspace:
    """{x : [x, w, g, ..., g] = 0 for all w in W}."""
    _same_dim(A, W)
    d, n = A.dim, A.arity
    if not A.table or W.is_zero():
        return full_space(d)
    basis = [unit(d, i) for i in range(1, d + 1)]
    rows = []
    for w in W.basis:
        for T in combinations(range(1, d + 1), n - 2):
            tail = [basis[t - 1] for t in T]
            cols = [bracket(A, basis[m], w, *tail) for m in range(d)]
            for k in range(d):
                row = {m: cols[m][k] for m in range(d) if cols[m][k]}
                if row:
                    rows.append(row)
    return nullspace_rows(rows, d)


def center(A: Algebra) -> Subspace:
    d, n = A.dim, A.arity
    if not A.table:
        return full_space(d)
    rows = []
    for T in combinations(range(1, d + 1), n - 1):
        cols = [A.basis_bracket((m,) + T) for m in range(1, d + 1)]
        for k in range(d):
            row = {m: cols[m][k] for m in range(d) if cols[m][k]}
            if row:
                rows.append(row)
    return nullspace_rows(rows, d)


def is_ideal(A: Algebra, W: Subspace) -> bool:
    _same_dim(A, W)
    g = full_space(A.dim)
    return is_subspace(bracket_span(A, W, *([g] * (A.arity - 1))), W)


def is_abelian_ideal(A: Algebra, W: Subspace) -> bool:
    if not is_ideal(A, W):
        return False
    g = full_space(A.dim)
    return bracket_span(A, W, W, *([g] * (A.arity - 2))).is_zero()


def is_subalgebra(A: Algebra, W: Subspace) -> bool:
    _same_dim(A, W)
    return is_subspace(bracket_span(A, *([W] * A.arity)), W)


# --------------------------------------------------------------------------
# derived algebras: quotients, restrictions, relabelling
# --------------------------------------------------------------------------


def _table_on(A: Algebra, vectors: list, coords) -> dict:
    table = {}
    for key in combinations(range(1, len(vectors) + 1), A.arity):
        v = bracket(A, *[vectors[i - 1] for i in key])
        if any(v):
            c = coords(v)
            if any(c):
                table[key] = tuple(c)
    return table


def quotient_algebra(A: Algebra, I: Subspace) -> tuple[Algebra, Mat]:
    """A/I on the basis complement(I), with the projection matrix.

    The projection sends old coordinates to coordinates on the non-pivot
    standard vectors of I.
    """
    if not is_ideal(A, I):
        raise NotAnIdeal("quotient requires an ideal")
    d = A.dim
    keep = [j for j in range(d) if j not in set(I.pivots)]
    reps = [unit(d, j + 1) for j in keep]

    def coords(v):
        r = reduce_mod(I, v)
        return [r[j] for j in keep]

    proj_cols = [coords(unit(d, j + 1)) for j in range(d)]
    proj = Mat(tuple(tuple(proj_cols[j][i] for j in range(d)) for i in range(len(keep))), d)
    labels = tuple(A.labels[j] for j in keep) if A.labels else None
    Q = Algebra(A.arity, len(keep), _table_on(A, reps, coords), labels)
    return Q, proj


def restrict(A: Algebra, W: Subspace) -> Algebra:
    """The subalgebra W in coordinates of its canonical basis."""
    if not is_subalgebra(A, W):
        raise NotASubalgebra("subspace is not closed under the bracket")
    return Algebra(A.arity, W.dim, _table_on(A, list(W.basis), W.coordinates))


def in_basis(A: Algebra, vectors: Sequence[Vec]) -> Algebra:
    """The same algebra written in a new basis (rows of ``vectors``)."""
    d = A.dim
    if len(vectors) != d:
        raise DimensionMismatch("a basis needs exactly dim vectors")
    P = Mat(tuple(vec(v) for v in vectors), d)
    W = span(P.rows, d)
    if not W.is_full():
        raise ParameterError("vectors are not a basis")
    Pt = P.transpose()
    return Algebra(A.arity, d, _table_on(A, list(P.rows), lambda v: solve(Pt, v)))


def permute(A: Algebra, perm: Sequence[int]) -> Algebra:
    """Relabel basis vectors: old e_i becomes new e_{perm[i-1]} (1-based)."""
    d = A.dim
    if sorted(perm) != list(range(1, d + 1)):
        raise ParameterError("perm must be a permutation of 1..dim")
    table = {}
    for key, v in A.table.items():
        sign, nkey = sort_signed([perm[i - 1] for i in key])
        nv = [ZERO] * d
        for k, c in enumerate(v):
            nv[perm[k] - 1] = c if sign > 0 else -c
        table[nkey] = tuple(nv)
    labels = None
    if A.labels:
        lab = [None] * d
        for i, name in enumerate(A.labels):
            lab[perm[i] - 1] = name
        labels = tuple(lab)
    return Algebra(A.arity, d, table, labels)


def direct_sum(parts: Sequence[Algebra]) -> Algebra:
    """Block-diagonal structure tensor; cross brackets vanish."""
    if not parts:
        raise ParameterError("need at least one summand")
    n = parts[0].arity
    if any(p.arity != n for p in parts):
        raise ParameterError("summands must share the arity")
    d = sum(p.dim for p in parts)
    table = {}
    off = 0
    for p in parts:
        for key, v in p.table.items():
            nv = [ZERO] * d
            nv[off:off + p.dim] = v
            table[tuple(i + off for i in key)] = tuple(nv)
        off += p.dim
    labels = None
    if all(p.labels for p in parts):
        labels = tuple(lbl for p in parts for lbl in p.labels)
    return Algebra(n, d, table, labels)
