"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are tuples of Fractions.  Subspaces are stored by
the unique reduced row-echelon form of any spanning set, so two
:class:`Subspace` objects compare equal exactly when they are the same set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Scalar = Fraction
Vec = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values: Iterable) -> Vec:
    return tuple(Fraction(v) for v in values)


def zero_vec(d: int) -> Vec:
    return (ZERO,) * d


def unit(d: int, i: int) -> Vec:
    """Standard basis vector e_i of Q^d (``i`` is 1-based)."""
    if not 1 <= i <= d:
        raise IndexError(f"basis index {i} outside 1..{d}")
    return tuple(ONE if j == i - 1 else ZERO for j in range(d))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v: Vec) -> Vec:
    return tuple(c * a for a in v)


def axpy(c, x: Vec, y: Vec) -> Vec:
    """c*x + y."""
    return tuple(c * a + b for a, b in zip(x, y))


def dot(u: Vec, v: Vec):
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def is_zero(v: Vec) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Mat:
    """Dense r x c matrix of Fractions, row-major."""

    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Mat":
        rs = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rs[0])
        for r in rs:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        return cls(rs, ncols)

    @classmethod
    def identity(cls, d: int) -> "Mat":
        return cls(tuple(unit(d, i) for i in range(1, d + 1)), d)

    @classmethod
    def zeros(cls, r: int, c: int) -> "Mat":
        return cls(tuple(zero_vec(c) for _ in range(r)), c)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Mat":
        return Mat(tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows)

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} vs {self.ncols} columns")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = other.transpose().rows if other.ncols else ()
        return Mat(tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)

    def is_symmetric(self) -> bool:
        n = self.nrows
        if n != self.ncols:
            return False
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))


# --------------------------------------------------------------------------
# row reduction
# --------------------------------------------------------------------------


class _Echelon:
    """Incremental RREF over sparse rows (dicts col -> Fraction).

    Pivot rows are kept fully reduced, so inserting a row costs one pass
    over the pivots it touches plus one back-elimination when it adds a
    new pivot.
    """

    __slots__ = ("pivots",)

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if not f:
                continue
            for pc, pv in pivots[c].items():
                nv = row.get(pc, ZERO) - f * pv
                if nv:
                    row[pc] = nv
                else:
                    row.pop(pc, None)
        return row

    def insert(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = 1 / row[lead]
        row = {c: v * inv for c, v in row.items()}
        for prow in self.pivots.values():
            f = prow.get(lead)
            if f:
                for c, v in row.items():
                    nv = prow.get(c, ZERO) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        del prow[c]
        self.pivots[lead] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def dense_rows(self, ncols: int) -> tuple:
        out = []
        for p in sorted(self.pivots):
            r = [ZERO] * ncols
            for c, v in self.pivots[p].items():
                r[c] = v
            out.append(tuple(r))
        return tuple(out)


def _sparse(row: Sequence) -> dict:
    return {j: Fraction(v) for j, v in enumerate(row) if v}


def rref(m: Mat) -> tuple[Mat, int]:
    """Reduced row-echelon form of ``m`` with zero rows dropped, and its rank."""
    ech = _Echelon()
    for r in m.rows:
        ech.insert(_sparse(r))
    return Mat(ech.dense_rows(m.ncols), m.ncols), ech.rank


def rank(m: Mat) -> int:
    return rref(m)[1]


def _kernel_basis(ech: _Echelon, ncols: int) -> list[Vec]:
    pivots = ech.pivots
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for p, row in pivots.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return basis


def nullspace_rows(rows: Iterable, ncols: int) -> "Subspace":
    """Null space of the system given as an iterable of rows.

    Rows may be dense sequences or sparse dicts ``{col: value}``; zero rows
    are skipped cheaply, which matters for the large, mostly-empty systems
    assembled by the form solver.
    """
    ech = _Echelon()
    for r in rows:
        sr = r if isinstance(r, dict) else _sparse(r)
        if sr:
            ech.insert(sr)
    return span(_kernel_basis(ech, ncols), ncols)


def nullspace(m: Mat) -> "Subspace":
    return nullspace_rows(m.rows, m.ncols)


def solve(m: Mat, b: Vec) -> Vec | None:
    """One solution of m x = b (free variables set to 0), or None."""
    if len(b) != m.nrows:
        raise DimensionMismatch("right-hand side length")
    nc = m.ncols
    ech = _Echelon()
    for r, rhs in zip(m.rows, b):
        sr = _sparse(r)
        if rhs:
            sr[nc] = Fraction(rhs)
        ech.insert(sr)
    if nc in ech.pivots:
        return None
    x = [ZERO] * nc
    for p, row in ech.pivots.items():
        x[p] = row.get(nc, ZERO)
    return tuple(x)


def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by elimination."""
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return Fraction(rows[0][0])
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a = [list(r) for r in rows]
    sign = 1
    acc = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        acc *= piv
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f / piv
                ar, ac = a[r], a[c]
                for j in range(c + 1, n):
                    if ac[j]:
                        ar[j] -= f * ac[j]
    return acc if sign > 0 else -acc


# --------------------------------------------------------------------------
# subspaces
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^d held as its canonical RREF basis.

    Build instances with :func:`span` (or the lattice operations); the
    constructor trusts that ``basis`` is already in RREF.
    """

    ambient_dim: int
    basis: tuple  # tuple of Vec, RREF rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        """0-based pivot columns."""
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def basis_mat(self) -> Mat:
        return Mat(self.basis, self.ambient_dim)

    def __contains__(self, v) -> bool:
        return contains(self, tuple(v))

    def __le__(self, other: "Subspace") -> bool:
        return is_subspace(self, other)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def coordinates(self, v: Vec) -> Vec:
        """Coordinates of ``v`` in the canonical basis; ValueError if v is outside."""
        v = tuple(v)
        coords = tuple(v[p] for p in self.pivots)
        recon = zero_vec(self.ambient_dim)
        for c, b in zip(coords, self.basis):
            if c:
                recon = axpy(c, b, recon)
        if recon != v:
            raise ValueError("vector not in subspace")
        return coords

    def __repr__(self) -> str:
        rows = ["(" + ", ".join(str(x) for x in r) + ")" for r in self.basis]
        return f"Subspace(d={self.ambient_dim}, [{'; '.join(rows)}])"


def span(vs: Iterable, d: int | None = None) -> Subspace:
    vs = [tuple(v) for v in vs]
    if d is None:
        if not vs:
            raise ValueError("ambient dimension needed for an empty span")
        d = len(vs[0])
    ech = _Echelon()
    for v in vs:
        if len(v) != d:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{d}")
        ech.insert(_sparse(v))
    return Subspace(d, ech.dense_rows(d))


def zero_space(d: int) -> Subspace:
    return Subspace(d, ())


def full_space(d: int) -> Subspace:
    return Subspace(d, tuple(unit(d, i) for i in range(1, d + 1)))


def coordinate_span(d: int, indices: Iterable[int]) -> Subspace:
    """span{e_i : i in indices}, 1-based."""
    return span([unit(d, i) for i in indices], d)


def _same_ambient(*spaces: Subspace) -> int:
    d = spaces[0].ambient_dim
    for s in spaces[1:]:
        if s.ambient_dim != d:
            raise DimensionMismatch(f"subspaces of Q^{d} and Q^{s.ambient_dim}")
    return d


def sum_(*spaces: Subspace) -> Subspace:
    d = _same_ambient(*spaces)
    return span([b for s in spaces for b in s.basis], d)


def annihilator(a: Subspace) -> Subspace:
    """{x : <b, x> = 0 for every basis row b} under the standard pairing."""
    return nullspace_rows(a.basis, a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    # A ∩ B = ann(ann(A) + ann(B)) for the standard dot product on Q^d.
    d = _same_ambient(a, b)
    dual = [r for r in annihilator(a).basis] + [r for r in annihilator(b).basis]
    return nullspace_rows(dual, d)


def contains(a: Subspace, v: Vec) -> bool:
    if len(v) != a.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} in Q^{a.ambient_dim}")
    v = list(v)
    for b, p in zip(a.basis, a.pivots):
        c = v[p]
        if c:
            for j, x in enumerate(b):
                if x:
                    v[j] -= c * x
    return not any(v)


def is_subspace(a: Subspace, b: Subspace) -> bool:
    _same_ambient(a, b)
    return all(contains(b, v) for v in a.basis)


def complement(a: Subspace) -> Subspace:
    """Span of the standard basis vectors at the non-pivot columns of ``a``."""
    d = a.ambient_dim
    piv = set(a.pivots)
    return coordinate_span(d, [j + 1 for j in range(d) if j not in piv])


def reduce_mod(a: Subspace, v: Vec) -> Vec:
    """Representative of v + a supported on the non-pivot columns of ``a``."""
    v = list(v)
    for b, p in zip(a.basis, a.pivots):
        c = v[p]
        if c:
            for j, x in enumerate(b):
                if x:
                    v[j] -= c * x
    return tuple(v)
