"""Case detection for (n+k)-dimensional metric n-Lie algebras, 2 <= k <= n+1.

The case is read off invariants (center, derived algebra, their
intersection); no isomorphism to a normal form is constructed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .algebra import center, derived_algebra, is_perfect, is_solvable, restrict
from .errors import ClassificationInconsistency, VerificationError
from .linalg import intersect, is_subspace, sum_
from .metric import MetricAlgebra, is_isotropic

CASES = ("abelian", "case1_isotropic_center", "case2_reductive", "case3_mixed", "out_of_range")


@dataclass(frozen=True)
class Profile:
    dim_center: int
    dim_derived: int
    center_isotropic: bool
    dim_center_cap_derived: int
    solvable: bool
    perfect: bool


@dataclass(frozen=True)
class ClassificationReport:
    case: str
    n: int
    d: int
    k: int
    profile: Profile
    l: int | None = None
    k1: int | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["profile"] = asdict(self.profile)
        return out


def profile(MA: MetricAlgebra) -> Profile:
    A = MA.algebra
    C = center(A)
    D = derived_algebra(A)
    K = intersect(C, D)
    return Profile(
        dim_center=C.dim,
        dim_derived=D.dim,
        center_isotropic=is_isotropic(MA.form, C),
        dim_center_cap_derived=K.dim,
        solvable=is_solvable(A),
        perfect=D.is_full(),
    )


def classify(MA: MetricAlgebra) -> ClassificationReport:
    if not MA.status.ok:
        raise VerificationError(f"classify needs a verified metric algebra, status {MA.status}")
    A = MA.algebra
    n, d = A.arity, A.dim
    k = d - n
    prof = profile(MA)

    def fail(msg):
        raise ClassificationInconsistency(msg, asdict(prof))

    if not A.table:
        return ClassificationReport("abelian", n, d, k, prof)
    if not 2 <= k <= n + 1:
        return ClassificationReport("out_of_range", n, d, k, prof)

    C, D = center(A), derived_algebra(A)
    # For a metric algebra g¹ = C⊥, so C ⊆ g¹ exactly when C is isotropic.
    if is_subspace(C, D) != prof.center_isotropic:
        fail("center isotropy disagrees with center ⊆ derived algebra")
    if prof.center_isotropic:
        if prof.dim_center != k - 1:
            fail(f"isotropic center of dimension {prof.dim_center}, expected k-1 = {k - 1}")
        if prof.dim_derived != n + 1:
            fail(f"derived algebra of dimension {prof.dim_derived}, expected n+1 = {n + 1}")
        return ClassificationReport("case1_isotropic_center", n, d, k, prof)

    if prof.dim_center_cap_derived == 0:
        if not sum_(C, D).is_full():
            fail("center and derived algebra do not span the algebra")
        if prof.dim_derived != n + 1:
            fail(f"derived algebra of dimension {prof.dim_derived}, expected n+1 = {n + 1}")
        if not is_perfect(restrict(A, D)):
            fail("derived algebra is not perfect")
        return ClassificationReport("case2_reductive", n, d, k, prof)

    k1 = prof.dim_center_cap_derived
    l = k - k1 - 1
    if not 1 <= l < k - 1:
        fail(f"mixed case with l = {l} outside 1 <= l < k-1 = {k - 1}")
    if prof.dim_derived != n + 1:
        fail(f"derived algebra of dimension {prof.dim_derived}, expected n+1 = {n + 1}")
    return ClassificationReport("case3_mixed", n, d, k, prof, l=l, k1=k1)
