"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
happen; they are also repeated in the terminal summary.
"""

from __future__ import annotations

import os
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F
from itertools import combinations

import pytest
from helpers import ideal_generated, isotropic_line, random_subspace, random_vector
from oracles import dense_bracket, dense_tensor, form_space_dim

from nlie import catalog, kernels
from nlie.algebra import (
    bracket,
    bracket_span,
    center,
    centralizer,
    check_fundamental_identity,
    derived_algebra,
    derived_series,
    is_abelian_ideal,
    is_ideal,
    is_perfect,
    restrict,
)
from nlie.classify import classify
from nlie.linalg import coordinate_span, full_space, intersect, span, sum_
from nlie.metric import (
    LeviAnnotation,
    check_all,
    check_invariance,
    gram_block,
    invariant_form_space,
    is_isotropic,
    metric_quotient,
    orthogonal_complement,
    permute,
    reduce_by_center,
    verify_levi,
)

RESULTS: dict[int, tuple[bool, str]] = {}

A_VALUES = (F(1), F(3, 2))


@contextmanager
def criterion(num: int, title: str):
    try:
        yield
    except BaseException as exc:
        RESULTS[num] = (False, f"{title}: {type(exc).__name__}: {str(exc)[:200]}")
        print(f"\nCRITERION {num}: FAIL  {title}")
        raise
    RESULTS[num] = (True, title)
    print(f"\nCRITERION {num}: PASS  {title}")


def grid():
    """(label, builder, expected case, k, l) for every instance of the axiom grid."""
    for n in (2, 3, 4, 5):
        for a in A_VALUES:
            yield (f"simple({n},{a})", lambda n=n, a=a: catalog.build_simple(n, a, workers=1), None, None, None)
        for lam in (1, 2):
            for mu in (1, 2):
                yield (f"g0({n},{lam},{mu})", lambda n=n, lam=lam, mu=mu: catalog.build_g0(n, lam, mu, workers=1),
                       None, None, None)
        for k in range(2, n + 2):
            yield (f"abelian({n},{n + k})", lambda n=n, k=k: catalog.build_abelian(n, n + k, workers=1),
                   "abelian", k, None)
            for a in A_VALUES:
                yield (f"case1({n},{k},{a})", lambda n=n, k=k, a=a: catalog.build_case1(n, k, a, workers=1),
                       "case1_isotropic_center", k, None)
                yield (f"case2({n},{k},{a})", lambda n=n, k=k, a=a: catalog.build_case2(n, k, a, workers=1),
                       "case2_reductive", k, None)
                for l in range(1, k - 1):
                    yield (f"case3({n},{k},{l},{a})",
                           lambda n=n, k=k, l=l, a=a: catalog.build_case3(n, k, l, a, workers=1),
                           "case3_mixed", k, l)


def case1_grid():
    for n in (2, 3, 4, 5):
        for k in range(2, n + 2):
            for a in A_VALUES:
                yield n, k, a


# a representative of every family, kept small enough for the dense oracle
CATALOG = {
    "abelian(3,4)": lambda: catalog.build_abelian(3, 4),
    "simple(2,1)": lambda: catalog.build_simple(2, 1),
    "simple(3,3/2)": lambda: catalog.build_simple(3, F(3, 2)),
    "simple(4,1)": lambda: catalog.build_simple(4, 1),
    "g0(2,1,2)": lambda: catalog.build_g0(2, 1, 2),
    "g0(3,1,1)": lambda: catalog.build_g0(3, 1, 1),
    "case1(3,2,1)": lambda: catalog.build_case1(3, 2, 1),
    "case1(4,3,3/2)": lambda: catalog.build_case1(4, 3, F(3, 2)),
    "case2(3,3,1)": lambda: catalog.build_case2(3, 3, 1),
    "case3(4,4,1,2)": lambda: catalog.build_case3(4, 4, 1, 2),
    "g0(2)+simple(2)": lambda: catalog.ortho_direct_sum([catalog.build_g0(2), catalog.build_simple(2)]),
}


def test_criterion_1_axiom_suite():
    with criterion(1, "axiom suite on the full build grid"):
        total = 0.0
        count = 0
        slow = []
        for label, build, *_ in grid():
            t0 = time.perf_counter()
            MA = build()
            reports = check_all(MA.algebra, MA.form, workers=1)
            dt = time.perf_counter() - t0
            total += dt
            count += 1
            bad = [k for k, r in reports.items() if not r.ok]
            assert not bad, f"{label} fails {bad}"
            if dt > 10:
                slow.append((label, dt))
        assert not slow, f"instances over 10 s: {slow}"
        assert total <= 300, f"grid took {total:.1f} s"
        print(f"\n  {count} instances, {total:.1f} s total")


def test_criterion_2_case1_center_and_derived():
    with criterion(2, "case-1 center dim k-1, derived dim n+1, isotropic center, C = (g1)-perp"):
        for n, k, a in case1_grid():
            MA = catalog.build_case1(n, k, a)
            C, D = center(MA.algebra), derived_algebra(MA.algebra)
            assert C.dim == k - 1, (n, k, a)
            assert D.dim == n + 1, (n, k, a)
            assert is_isotropic(MA.form, C)
            assert C == orthogonal_complement(MA.form, D)
            assert D == orthogonal_complement(MA.form, C)


def _check_form_basis(A, forms):
    for B in forms:
        assert B.is_symmetric()
        assert check_invariance(A, B).ok


def test_criterion_3_metric_dimension():
    with criterion(3, "metric dimension 2 for g0, 2m for m copies, 1 for the simple algebra"):
        for n in (2, 3, 4):
            A = catalog.build_g0(n, 1, 1).algebra
            forms, dim = invariant_form_space(A)
            assert dim == 2, (n, dim)
            _check_form_basis(A, forms)
        for n in (2, 3):
            for m in (2, 3):
                MA = catalog.ortho_direct_sum([catalog.build_g0(n, 1, 1)] * m)
                forms, dim = invariant_form_space(MA.algebra)
                assert dim == 2 * m, (n, m, dim)
                _check_form_basis(MA.algebra, forms)
        S = catalog.build_simple(3, 1).algebra
        forms, dim = invariant_form_space(S)
        assert dim == 1 == form_space_dim(S)
        _check_form_basis(S, forms)


def test_criterion_4_classifier_round_trip():
    with criterion(4, "classifier round trip on the grid, invariant under 10 permutations each"):
        rng = random.Random(20261016)
        count = 0
        for label, build, case, k, l in grid():
            if case is None:
                continue
            MA = build()
            rep = classify(MA)
            want = (case, k, l, (k - l - 1) if l is not None else None)
            assert (rep.case, rep.k, rep.l, rep.k1) == want, label
            for _ in range(10):
                perm = list(range(1, MA.dim + 1))
                rng.shuffle(perm)
                r2 = classify(permute(MA, perm))
                assert (r2.case, r2.k, r2.l, r2.k1) == want, (label, perm)
            count += 1
        print(f"\n  {count} instances x 10 permutations")


def test_criterion_5_quotient_and_reduction():
    with criterion(5, "quotient by center and reduction by l = k-1 on case-1 instances"):
        reduced = 0
        for n, k, a in case1_grid():
            MA = catalog.build_case1(n, k, a)
            C = center(MA.algebra)
            Q = metric_quotient(MA, C)
            assert Q.algebra.is_abelian
            assert Q.form.is_nondegenerate() and Q.status.ok
            assert Q.dim == n - k + 2
            l = k - 1
            if n - l < 2:
                continue
            R = reduce_by_center(MA, l)
            assert R.arity == n - l and R.status.ok
            assert all(r.ok for r in check_all(R.algebra, R.form).values())
            D = derived_algebra(R.algebra)
            assert D.dim == n - l + 1
            assert is_perfect(restrict(R.algebra, D))
            C0 = center(R.algebra)
            assert intersect(C0, D).is_zero() and sum_(C0, D).is_full()
            reduced += 1
        assert reduced > 0


def _isotropic_vector(MA):
    B = MA.form
    for i in range(1, MA.dim + 1):
        e = tuple(F(int(j == i)) for j in range(1, MA.dim + 1))
        if B(e, e) == 0:
            return e
    return None


def test_criterion_6_lemma_suite():
    with criterion(6, "orthogonality and ideal lemmas on >= 200 random subspaces per algebra"):
        N = 200
        for name, build in CATALOG.items():
            MA = build()
            A, B, d = MA.algebra, MA.form, MA.dim
            rng = random.Random(name)
            g = full_space(d)
            for _ in range(N):
                W = random_subspace(rng, d)
                Wp = orthogonal_complement(B, W)
                assert W.dim + Wp.dim == d, name
                assert orthogonal_complement(B, Wp) == W, name

            f = _isotropic_vector(MA)
            saw_false = False
            for _ in range(N):
                if f is not None:
                    J1, J2 = isotropic_line(rng, B, f), isotropic_line(rng, B, f)
                else:
                    J1 = (lambda W: intersect(W, orthogonal_complement(B, W)))(random_subspace(rng, d))
                    J2 = (lambda W: intersect(W, orthogonal_complement(B, W)))(random_subspace(rng, d))
                assert is_isotropic(B, J1) and is_isotropic(B, J2)
                cross_zero = not any(any(r) for r in gram_block(B, J1, J2))
                assert is_isotropic(B, sum_(J1, J2)) == cross_zero, name
                saw_false |= not cross_zero
            if f is not None:
                assert saw_false, f"{name}: no non-orthogonal isotropic pair sampled"

            C = center(A)
            K = intersect(C, derived_algebra(A))
            fixed = [S for S in derived_series(A)] + [C, K]
            iso = 0
            for i in range(N):
                if i % 3 == 0:
                    I = ideal_generated(A, span([random_vector(rng, d)], d))
                elif i % 3 == 1 and C.dim:
                    # any subspace of the center is an ideal
                    coeffs = [F(rng.randint(-2, 2)) for _ in C.basis]
                    I = span([tuple(sum(c * b[j] for c, b in zip(coeffs, C.basis)) for j in range(d))], d)
                else:
                    I = fixed[i % len(fixed)]
                assert is_ideal(A, I), name
                rhs = orthogonal_complement(B, bracket_span(A, I, *([g] * (A.arity - 1))))
                assert centralizer(A, I) == rhs, name
                if is_isotropic(B, I):
                    iso += 1
                    assert is_abelian_ideal(A, I), name
            print(f"\n  {name}: {N} subspaces, {N} isotropic pairs, {N} ideals ({iso} isotropic)")


def test_criterion_7_oracle_equivalence():
    with criterion(7, "canonical bracket equals dense-tensor bracket on 100 random inputs per algebra"):
        for name, build in CATALOG.items():
            A = build().algebra
            T = dense_tensor(A)
            rng = random.Random(name)
            for _ in range(100):
                vs = [random_vector(rng, A.dim) for _ in range(A.arity)]
                assert bracket(A, *vs) == dense_bracket(T, *vs), name


def test_criterion_8_levi_on_g0():
    with criterion(8, "Levi annotation checks on g0(3,1,1)"):
        MA = catalog.build_g0(3, 1, 1)
        s = coordinate_span(8, range(1, 5))
        r = coordinate_span(8, range(5, 9))
        rep = verify_levi(MA, LeviAnnotation((s,), r, r))
        assert rep.ok, rep.failures
        assert rep["s_acts_onto_r_perp"]
        assert rep["r_equals_r_perp"]
        assert rep["centralizer_of_r"]


def _dense_table(n, d, seed):
    rng = random.Random(seed)
    return {key: tuple(F(rng.randint(-3, 3), rng.choice((1, 2))) for _ in range(d))
            for key in combinations(range(1, d + 1), n)}


def test_criterion_9_performance():
    with criterion(9, "fundamental-identity sweep at n=4, d=12 within 30 s single-threaded"):
        MA = catalog.ortho_direct_sum([catalog.build_g0(4, 1, 1), catalog.build_abelian(4, 2)])
        assert MA.dim == 12 and MA.arity == 4
        t0 = time.perf_counter()
        assert check_fundamental_identity(MA.algebra, workers=1).ok
        t_cat = time.perf_counter() - t0

        dense = _dense_table(4, 12, 9)
        t0 = time.perf_counter()
        serial = kernels.fi_residuals(4, 12, dense, workers=1)
        t_dense = time.perf_counter() - t0
        assert t_cat <= 30 and t_dense <= 30, (t_cat, t_dense)
        print(f"\n  catalog d=12: {t_cat:.2f} s; dense random d=12: {t_dense:.2f} s "
              f"({len(serial)} residuals, backend {kernels.default_backend()})")

        t0 = time.perf_counter()
        parallel = kernels.fi_residuals(4, 12, dense, workers=2)
        t_par = time.perf_counter() - t0
        assert parallel == serial
        print(f"  NLK_WORKERS=2: {t_par:.2f} s, identical output")


@pytest.mark.skipif((os.cpu_count() or 1) < 2, reason="worker scaling needs at least 2 CPUs")
def test_criterion_9_worker_scaling():
    dense = _dense_table(4, 12, 9)
    t0 = time.perf_counter()
    kernels.fi_residuals(4, 12, dense, workers=1, backend="python")
    t1 = time.perf_counter() - t0
    w = min(4, os.cpu_count() or 1)
    t0 = time.perf_counter()
    kernels.fi_residuals(4, 12, dense, workers=w, backend="python")
    tw = time.perf_counter() - t0
    print(f"\n  python backend: 1 worker {t1:.2f} s, {w} workers {tw:.2f} s")
    assert tw < t1
