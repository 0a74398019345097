"""Invariant bilinear forms on n-Lie algebras and the constructions built on them."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import (
    Algebra,
    ViolationReport,
    Witness,
    bracket,
    bracket_span,
    center,
    centralizer,
    check_fundamental_identity,
    derived_algebra,
    is_ideal,
    is_solvable,
    is_subalgebra,
    restrict,
)
from .algebra import permute as permute_algebra
from .errors import (
    DimensionMismatch,
    NotAnIdeal,
    NotIsotropic,
    ParameterError,
    VerificationError,
)
from .linalg import (
    ZERO,
    Mat,
    Subspace,
    Vec,
    axpy,
    complement,
    contains,
    intersect,
    is_subspace,
    nullspace,
    nullspace_rows,
    rank,
    reduce_mod,
    solve,
    span,
    sum_,
    unit,
    zero_space,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Form:
    """Bilinear form on Q^dim given by its Gram matrix.

    Symmetry is not enforced here; :func:`check_symmetry` reports it.
    """

    dim: int
    gram: Mat

    def __post_init__(self):
        if self.gram.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"gram of shape {self.gram.shape} for dimension {self.dim}")

    @classmethod
    def from_rows(cls, rows) -> "Form":
        m = Mat.from_rows(rows, len(rows))
        return cls(m.nrows, m)

    @classmethod
    def identity(cls, d: int) -> "Form":
        return cls(d, Mat.identity(d))

    def __call__(self, u: Vec, v: Vec) -> Fraction:
        g = self.gram.rows
        acc = ZERO
        for i, a in enumerate(u):
            if a:
                row = g[i]
                for j, b in enumerate(v):
                    if b and row[j]:
                        acc += a * row[j] * b
        return acc

    def is_symmetric(self) -> bool:
        return self.gram.is_symmetric()

    def is_nondegenerate(self) -> bool:
        return rank(self.gram) == self.dim

    def lower(self, v: Vec) -> Vec:
        """The covector B(v, .) as a row."""
        g = self.gram.rows
        out = [ZERO] * self.dim
        for i, a in enumerate(v):
            if a:
                for j, x in enumerate(g[i]):
                    if x:
                        out[j] += a * x
        return tuple(out)


@dataclass(frozen=True)
class Status:
    fundamental_identity_ok: bool = False
    symmetric_ok: bool = False
    invariance_ok: bool = False
    nondegenerate_ok: bool = False

    @property
    def ok(self) -> bool:
        return (self.fundamental_identity_ok and self.symmetric_ok
                and self.invariance_ok and self.nondegenerate_ok)


@dataclass(frozen=True)
class MetricAlgebra:
    algebra: Algebra
    form: Form
    status: Status = field(default_factory=Status)

    def __post_init__(self):
        if self.algebra.dim != self.form.dim:
            raise DimensionMismatch("algebra and form dimensions differ")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def arity(self) -> int:
        return self.algebra.arity


@dataclass(frozen=True)
class LeviAnnotation:
    """Claimed Levi data: simple parts s_1..s_m, radical r, optional isomaximal ideal."""

    s_parts: tuple
    r: Subspace
    iso_ideal: Subspace | None = None


@dataclass(frozen=True)
class LeviReport:
    checks: tuple  # ((name, passed), ...) in evaluation order

    @property
    def ok(self) -> bool:
        return all(p for _, p in self.checks)

    @property
    def failures(self) -> list[str]:
        return [name for name, p in self.checks if not p]

    def __getitem__(self, name: str) -> bool:
        for k, p in self.checks:
            if k == name:
                return p
        raise KeyError(name)


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------


def check_symmetry(B: Form) -> ViolationReport:
    g = B.gram.rows
    wit = tuple(
        Witness(((i + 1, j + 1),), g[i][j] - g[j][i])
        for i in range(B.dim) for j in range(i + 1, B.dim) if g[i][j] != g[j][i]
    )
    return ViolationReport("symmetry", wit)


def check_nondegeneracy(B: Form) -> ViolationReport:
    """Witnesses are basis vectors of the radical of B."""
    rad = nullspace(B.gram)
    return ViolationReport("nondegeneracy", tuple(Witness((), v) for v in rad.basis))


def check_invariance(A: Algebra, B: Form) -> ViolationReport:
    """Residuals of B([T, e_p], e_q) + B([T, e_q], e_p) over sorted (n-1)-tuples T."""
    if A.dim != B.dim:
        raise DimensionMismatch("algebra and form dimensions differ")
    d, n = A.dim, A.arity
    wit = []
    if not A.table:
        return ViolationReport("invariance", ())
    for T in combinations(range(1, d + 1), n - 1):
        low = [B.lower(A.basis_bracket(T + (p,))) for p in range(1, d + 1)]
        if not any(any(x) for x in low):
            continue
        for p in range(d):
            for q in range(p, d):
                r = low[p][q] + low[q][p]
                if r:
                    wit.append(Witness((T, (p + 1, q + 1)), r))
    return ViolationReport("invariance", tuple(wit))


def check_all(A: Algebra, B: Form | None, workers: int | None = None) -> dict:
    """Every applicable report, keyed by kind."""
    reports = {"fundamental_identity": check_fundamental_identity(A, workers=workers)}
    if B is not None:
        reports["symmetry"] = check_symmetry(B)
        reports["invariance"] = check_invariance(A, B)
        reports["nondegeneracy"] = check_nondegeneracy(B)
    return reports


def verify(A: Algebra, B: Form, workers: int | None = None) -> MetricAlgebra:
    """Pair A with B and record the outcome of every check."""
    r = check_all(A, B, workers=workers)
    status = Status(
        fundamental_identity_ok=r["fundamental_identity"].ok,
        symmetric_ok=r["symmetry"].ok,
        invariance_ok=r["invariance"].ok,
        nondegenerate_ok=r["nondegeneracy"].ok,
    )
    return MetricAlgebra(A, B, status)


def _require_ok(MA: MetricAlgebra, what: str) -> None:
    if not MA.status.ok:
        raise VerificationError(f"{what} needs a verified metric algebra, status {MA.status}")


# --------------------------------------------------------------------------
# orthogonality
# --------------------------------------------------------------------------


def orthogonal_complement(B: Form, W: Subspace) -> Subspace:
    if W.ambient_dim != B.dim:
        raise DimensionMismatch("subspace and form dimensions differ")
    return nullspace_rows([B.lower(w) for w in W.basis], B.dim)


def gram_block(B: Form, U: Subspace, V: Subspace) -> tuple:
    return tuple(tuple(B(u, v) for v in V.basis) for u in U.basis)


def is_isotropic(B: Form, W: Subspace) -> bool:
    return all(B(u, v) == 0 for i, u in enumerate(W.basis) for v in W.basis[i:])


def is_coisotropic(B: Form, W: Subspace) -> bool:
    return is_subspace(orthogonal_complement(B, W), W)


def form_radical(B: Form, W: Subspace) -> Subspace:
    return intersect(W, orthogonal_complement(B, W))


def is_nondegenerate_subspace(B: Form, W: Subspace) -> bool:
    return form_radical(B, W).is_zero()


def restrict_form(B: Form, W: Subspace) -> Form:
    """B on W in the coordinates of W's canonical basis."""
    return Form(W.dim, Mat(gram_block(B, W, W), W.dim))


# --------------------------------------------------------------------------
# invariant forms
# --------------------------------------------------------------------------


def invariant_form_space(A: Algebra) -> tuple[list[Form], int]:
    """Basis of all symmetric bilinear forms satisfying the invariance condition.

    Unknowns are B_pq with p <= q; every sorted (n-1)-tuple T and pair
    p <= q contributes B([T,e_p], e_q) + B([T,e_q], e_p) = 0.
    """
    d, n = A.dim, A.arity
    idx = {}
    for p in range(d):
        for q in range(p, d):
            idx[(p, q)] = len(idx)

    def u(a, b):
        return idx[(a, b)] if a <= b else idx[(b, a)]

    def rows():
        if not A.table:
            return
        for T in combinations(range(1, d + 1), n - 1):
            br = [A.basis_bracket(T + (p,)) for p in range(1, d + 1)]
            sup = [[(k, c) for k, c in enumerate(v) if c] for v in br]
            if not any(sup):
                continue
            for p in range(d):
                for q in range(p, d):
                    if not sup[p] and not sup[q]:
                        continue
                    row: dict = {}
                    for k, c in sup[p]:
                        j = u(k, q)
                        row[j] = row.get(j, ZERO) + c
                    for k, c in sup[q]:
                        j = u(k, p)
                        row[j] = row.get(j, ZERO) + c
                    yield row

    sol = nullspace_rows(rows(), len(idx))
    forms = []
    for v in sol.basis:
        g = [[ZERO] * d for _ in range(d)]
        for (p, q), j in idx.items():
            g[p][q] = g[q][p] = v[j]
        forms.append(Form(d, Mat(tuple(tuple(r) for r in g), d)))
    return forms, sol.dim


# --------------------------------------------------------------------------
# quotients, splits, reductions
# --------------------------------------------------------------------------


def _table_on(arity: int, A: Algebra, vectors: list, coords) -> dict:
    table = {}
    for key in combinations(range(1, len(vectors) + 1), arity):
        v = bracket(A, *[vectors[i - 1] for i in key])
        if any(v):
            c = tuple(coords(v))
            if any(c):
                table[key] = c
    return table


def metric_quotient(MA: MetricAlgebra, I: Subspace, workers: int | None = None) -> MetricAlgebra:
    """The metric algebra I-perp / I for an isotropic ideal I.

    The quotient is written on the canonical basis of
    complement(I) ∩ I-perp.  When I equals its orthogonal complement the
    result is the zero-dimensional metric algebra.
    """
    _require_ok(MA, "metric_quotient")
    A, B = MA.algebra, MA.form
    if not is_ideal(A, I):
        raise NotAnIdeal("quotient requires an ideal")
    if not is_isotropic(B, I):
        raise NotIsotropic("quotient requires an isotropic ideal")
    if I.is_zero():
        return MA
    Ip = orthogonal_complement(B, I)
    if Ip == I:
        log.warning("ideal equals its orthogonal complement; quotient is zero-dimensional")
        return verify(Algebra(A.arity, 0, {}), Form(0, Mat((), 0)))
    Q = intersect(complement(I), Ip)
    reps = list(Q.basis)
    table = _table_on(A.arity, A, reps, lambda v: Q.coordinates(reduce_mod(I, v)))
    out = verify(Algebra(A.arity, Q.dim, table), restrict_form(B, Q), workers=workers)
    if not out.status.ok:
        raise VerificationError(f"quotient failed its checks: {out.status}")
    return out


def ortho_split(MA: MetricAlgebra) -> tuple[Subspace, Subspace]:
    """g = C1 ⊕ g1, orthogonal ideals, C1 central and nondegenerate, Z(g1) isotropic.

    The radical of B on the center is C ∩ g¹, so any complement of it in
    C is nondegenerate; C1 is grown from C's canonical basis in order.
    """
    _require_ok(MA, "ortho_split")
    A, B = MA.algebra, MA.form
    d = A.dim
    C = center(A)
    D = derived_algebra(A)
    K = intersect(C, D)
    acc = K
    picked = []
    for c in C.basis:
        if not contains(acc, c):
            picked.append(c)
            acc = sum_(acc, span([c], d))
    C1 = span(picked, d)
    g1 = orthogonal_complement(B, C1)

    problems = []
    if not (is_ideal(A, C1) and is_ideal(A, g1)):
        problems.append("parts are not ideals")
    if not (is_nondegenerate_subspace(B, C1) and is_nondegenerate_subspace(B, g1)):
        problems.append("form degenerates on a part")
    if not intersect(C1, g1).is_zero() or not sum_(C1, g1).is_full():
        problems.append("parts do not form a direct sum")
    if not problems:
        inner = restrict(A, g1)
        if not is_isotropic(restrict_form(B, g1), center(inner)):
            problems.append("center of g1 is not isotropic")
    if problems:
        raise VerificationError("; ".join(problems))
    return C1, g1


def dual_isotropic_basis(MA: MetricAlgebra, C: Subspace) -> list[Vec]:
    """Vectors f_1..f_l with B(c_r, f_s) = δ_rs and B(f_r, f_s) = 0.

    c_r is the canonical basis of the isotropic subspace C.  Each f_s starts
    as the particular solution of B(c_r, f) = δ_rs with free variables 0 and
    is then shifted inside C to make the f's mutually orthogonal.
    """
    B = MA.form
    if C.ambient_dim != B.dim:
        raise DimensionMismatch("subspace and form dimensions differ")
    if not is_isotropic(B, C):
        raise NotIsotropic("dual basis requires an isotropic subspace")
    if not B.is_nondegenerate():
        raise VerificationError("dual basis requires a nondegenerate form")
    l = C.dim
    if l == 0:
        return []
    sysm = Mat(tuple(B.lower(c) for c in C.basis), B.dim)
    fs = []
    for s in range(l):
        rhs = tuple(Fraction(int(r == s)) for r in range(l))
        f = solve(sysm, rhs)
        if f is None:
            raise VerificationError("no dual vector; is the form nondegenerate?")
        fs.append(f)
    half = Fraction(1, 2)
    gram_f = [[B(fs[s], fs[t]) for t in range(l)] for s in range(l)]
    out = []
    for s in range(l):
        v = fs[s]
        for r in range(l):
            a = half * gram_f[s][r]
            if a:
                v = axpy(-a, C.basis[r], v)
        out.append(v)
    return out


def reduce_by_center(MA: MetricAlgebra, l: int, workers: int | None = None) -> MetricAlgebra:
    """Lower the arity by l by freezing dual partners of central vectors.

    With c_1..c_l the first l canonical basis vectors of the center and
    f_1..f_l their isotropic duals, the new bracket on the same space is
    [x_1, ..., x_{n-l}]_0 = [x_1, ..., x_{n-l}, f_1, ..., f_l].
    """
    _require_ok(MA, "reduce_by_center")
    A, B = MA.algebra, MA.form
    n = A.arity
    if l < 0:
        raise ParameterError("l must be >= 0")
    if l == 0:
        return MA
    if n - l < 2:
        raise ParameterError(f"reducing arity {n} by {l} leaves arity below 2")
    C = center(A)
    if l > C.dim:
        raise ParameterError(f"center has dimension {C.dim} < {l}")
    Cl = Subspace(C.ambient_dim, C.basis[:l])
    if not is_isotropic(B, Cl):
        raise NotIsotropic("the selected central vectors are not isotropic")
    primes = dual_isotropic_basis(MA, Cl)
    d = A.dim
    basis = [unit(d, i) for i in range(1, d + 1)]
    table = {}
    for key in combinations(range(1, d + 1), n - l):
        v = bracket(A, *[basis[i - 1] for i in key], *primes)
        if any(v):
            table[key] = v
    out = verify(Algebra(n - l, d, table, A.labels), B, workers=workers)
    if not out.status.ok:
        raise VerificationError(f"reduced algebra failed its checks: {out.status}")
    return out


def verify_levi(MA: MetricAlgebra, ann: LeviAnnotation) -> LeviReport:
    """Check claimed Levi data against the structure results it must satisfy.

    Every sub-check is reported; nothing raises.
    """
    A, B = MA.algebra, MA.form
    n, d = A.arity, A.dim
    checks: list = []
    parts = list(ann.s_parts)
    for i, s in enumerate(parts, 1):
        sub = is_subalgebra(A, s)
        checks.append((f"s{i}_subalgebra", sub))
        checks.append((f"s{i}_dim", s.dim == n + 1))
        checks.append((f"s{i}_perfect", bracket_span(A, *([s] * n)) == s))
    s_all = sum_(*parts) if parts else zero_space(d)
    orth = True
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not bracket_span(A, parts[i], parts[j], *([s_all] * (n - 2))).is_zero():
                orth = False
    checks.append(("s_parts_bracket_orthogonal", orth))
    checks.append(("s_parts_direct", s_all.dim == sum(s.dim for s in parts)))
    r = ann.r
    checks.append(("s_cap_r_zero", intersect(s_all, r).is_zero()))
    checks.append(("s_plus_r_full", sum_(s_all, r).is_full()))
    r_ideal = is_ideal(A, r)
    checks.append(("r_ideal", r_ideal))
    checks.append(("r_solvable", is_solvable(A, r)))
    rp = orthogonal_complement(B, r)
    checks.append(("centralizer_of_r", centralizer(A, r) == sum_(center(A), rp)))
    checks.append(("s_acts_onto_r_perp", bracket_span(A, *([s_all] * (n - 1)), rp) == rp))
    if ann.iso_ideal is not None:
        I = ann.iso_ideal
        checks.append(("iso_ideal_is_ideal", is_ideal(A, I)))
        checks.append(("iso_ideal_isotropic", is_isotropic(B, I)))
        checks.append(("iso_ideal_contains_r_cap_r_perp", is_subspace(intersect(r, rp), I)))
        checks.append(("iso_ideal_in_r", is_subspace(I, r)))
    if is_isotropic(B, r):
        checks.append(("r_equals_r_perp", r == rp))
    return LeviReport(tuple(checks))


# --------------------------------------------------------------------------
# relabelling and sums
# --------------------------------------------------------------------------


def permute(MA: MetricAlgebra, perm: Sequence[int]) -> MetricAlgebra:
    """Relabel basis vectors consistently in the tensor and the Gram matrix."""
    d = MA.dim
    A = permute_algebra(MA.algebra, perm)
    g = [[ZERO] * d for _ in range(d)]
    old = MA.form.gram.rows
    for i in range(d):
        for j in range(d):
            g[perm[i] - 1][perm[j] - 1] = old[i][j]
    return MetricAlgebra(A, Form(d, Mat(tuple(tuple(r) for r in g), d)), MA.status)


def block_form(forms: Sequence[Form]) -> Form:
    d = sum(f.dim for f in forms)
    g = [[ZERO] * d for _ in range(d)]
    off = 0
    for f in forms:
        for i, row in enumerate(f.gram.rows):
            g[off + i][off:off + f.dim] = row
        off += f.dim
    return Form(d, Mat(tuple(tuple(r) for r in g), d))
