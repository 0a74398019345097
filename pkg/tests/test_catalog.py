from fractions import Fraction as F

import pytest

from nlie import catalog
from nlie.algebra import (
    Algebra,
    bracket,
    center,
    check_fundamental_identity,
    derived_algebra,
    is_perfect,
    is_solvable,
)
from nlie.errors import ParameterError
from nlie.linalg import Mat, coordinate_span, intersect, sum_, unit
from nlie.metric import (
    Form,
    check_invariance,
    invariant_form_space,
    is_isotropic,
    is_nondegenerate_subspace,
    orthogonal_complement,
    verify,
)


def neg(v):
    return tuple(-x for x in v)


class TestAbelian:
    def test_basic(self):
        MA = catalog.build_abelian(3, 5)
        assert MA.status.ok
        assert center(MA.algebra).is_full()
        assert invariant_form_space(MA.algebra)[1] == 15

    def test_degenerate_gram_rejected(self):
        with pytest.raises(ParameterError):
            catalog.build_abelian(2, 2, gram=[[1, 1], [1, 1]])

    def test_custom_gram(self):
        MA = catalog.build_abelian(2, 2, gram=[[0, 1], [1, 0]])
        assert MA.status.ok


class TestSimple:
    def test_brackets(self):
        A = catalog.build_simple(3, 1).algebra
        assert bracket(A, unit(4, 1), unit(4, 3), unit(4, 4)) == neg(unit(4, 2))
        assert bracket(A, unit(4, 2), unit(4, 3), unit(4, 4)) == unit(4, 1)

    def test_invariants(self):
        MA = catalog.build_simple(4, F(3, 2))
        assert MA.status.ok
        assert center(MA.algebra).is_zero()
        assert is_perfect(MA.algebra)

    def test_c_zero(self):
        with pytest.raises(ParameterError):
            catalog.build_simple(3, 0)


class TestG0:
    def test_mixed_bracket_sign(self):
        A = catalog.build_g0(3).algebra
        x = lambda i: unit(8, i)  # noqa: E731
        y = lambda i: unit(8, 4 + i)  # noqa: E731
        # regular-representation sign; the printed (+1) fails the checks
        assert bracket(A, x(3), x(4), y(2)) == neg(y(1))
        assert bracket(A, x(3), x(4), y(1)) == y(2)
        assert not any(bracket(A, y(1), y(2), x(1)))

    def test_y_brackets_mirror_x_brackets(self):
        # [x..x^_i..x^_j.., y_t] equals [x..x^_i..x^_j.., x_t] with x -> y
        A = catalog.build_g0(3).algebra
        for i in range(1, 5):
            for j in range(1, 5):
                if i == j:
                    continue
                rest = [unit(8, t) for t in range(1, 5) if t not in (i, j)]
                via_x = bracket(A, *rest, unit(8, j))
                via_y = bracket(A, *rest, unit(8, 4 + j))
                assert via_y == (F(0),) * 4 + via_x[:4]

    def test_tuple_count(self):
        A = catalog.build_g0(3).algebra
        assert len(A.table) == 16
        assert sum(1 for k in A.table if max(k) <= 4) == 4

    def test_literal_sign_fails(self):
        # the sign (-1)^(n-j+i) on the y_j rule breaks both axioms
        n, N = 3, 4
        br = [(tuple(t for t in range(1, N + 1) if t != i), {i: (-1) ** i}) for i in range(1, N + 1)]
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                base = tuple(t for t in range(1, N + 1) if t not in (i, j))
                br.append((base + (N + j,), {N + i: (-1) ** (n - j + i)}))
                br.append((base + (N + i,), {N + j: (-1) ** (n - i + j)}))
        A = Algebra.from_brackets(n, 2 * N, br)
        assert not check_fundamental_identity(A).ok
        assert not check_invariance(A, catalog.build_g0(3).form).ok

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("lam,mu", [(1, 1), (2, 1), (1, 2), (F(-1, 3), 5)])
    def test_checks(self, n, lam, mu):
        MA = catalog.build_g0(n, lam, mu)
        assert MA.status.ok
        assert MA.dim == 2 * (n + 1)
        assert is_perfect(MA.algebra)
        r = coordinate_span(MA.dim, range(n + 2, 2 * n + 3))
        assert orthogonal_complement(MA.form, r) == r

    def test_degenerate(self):
        with pytest.raises(ParameterError):
            catalog.build_g0(3, 1, 0)


class TestCase1:
    def test_brackets(self):
        A = catalog.build_case1(3, 2, 1).algebra
        assert bracket(A, unit(5, 2), unit(5, 3), unit(5, 4)) == unit(5, 1)
        assert bracket(A, unit(5, 3), unit(5, 4), unit(5, 5)) == neg(unit(5, 2))

    @pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (3, 2), (3, 4), (4, 3), (5, 6)])
    def test_structure(self, n, k):
        MA = catalog.build_case1(n, k, F(3, 2))
        A = MA.algebra
        assert MA.status.ok
        assert len(A.table) == n + 1
        C = center(A)
        assert C == coordinate_span(n + k, range(1, k))
        assert is_isotropic(MA.form, C)
        D = derived_algebra(A)
        assert D == coordinate_span(n + k, range(1, n + 2))
        assert D == orthogonal_complement(MA.form, C)
        assert is_solvable(A)

    @pytest.mark.parametrize("n,k,a", [(3, 1, 1), (3, 5, 1), (3, 2, 0), (1, 2, 1)])
    def test_bad_params(self, n, k, a):
        with pytest.raises(ParameterError):
            catalog.build_case1(n, k, a)


class TestCase2And3:
    @pytest.mark.parametrize("n,k", [(2, 2), (3, 3), (4, 5)])
    def test_case2(self, n, k):
        MA = catalog.build_case2(n, k, 2)
        A = MA.algebra
        assert MA.status.ok
        C, D = center(A), derived_algebra(A)
        assert C == coordinate_span(n + k, range(1, k))
        assert is_nondegenerate_subspace(MA.form, C)
        assert D.dim == n + 1
        assert intersect(C, D).is_zero() and sum_(C, D).is_full()

    def test_case3_example(self):
        MA = catalog.build_case3(3, 4, 1, 1)
        A = MA.algebra
        assert MA.status.ok and MA.dim == 7
        C, D = center(A), derived_algebra(A)
        assert intersect(C, D).dim == 2
        assert C.dim == 3
        assert D.dim == 4

    @pytest.mark.parametrize("k,l", [(3, 0), (3, 2), (2, 1)])
    def test_case3_bad_l(self, k, l):
        with pytest.raises(ParameterError):
            catalog.build_case3(3, k, l)


class TestOrthoSum:
    def test_two_g0(self):
        g = catalog.build_g0(3)
        MA = catalog.ortho_direct_sum([g, g])
        assert MA.dim == 16 and MA.status.ok
        assert MA.algebra.labels[0] == "x1.1" and MA.algebra.labels[8] == "x1.2"

    def test_with_zero_dim(self):
        g = catalog.build_simple(3)
        z = verify(Algebra(3, 0), Form(0, Mat((), 0)))
        MA = catalog.ortho_direct_sum([g, z])
        assert MA.algebra.table == g.algebra.table
        assert MA.form == g.form

    def test_abelians(self):
        MA = catalog.ortho_direct_sum([catalog.build_abelian(3, 2), catalog.build_abelian(3, 3)])
        assert MA.algebra.is_abelian and MA.dim == 5

    def test_arity_mismatch(self):
        with pytest.raises(ParameterError):
            catalog.ortho_direct_sum([catalog.build_simple(2), catalog.build_simple(3)])


def test_build_dispatch():
    p = catalog.FamilyParams("case3", n=4, k=4, l=1, a=F(2))
    assert catalog.build(p) == catalog.build_case3(4, 4, 1, 2)
    with pytest.raises(ParameterError):
        catalog.build(catalog.FamilyParams("case1", n=3))
    with pytest.raises(ParameterError):
        catalog.build(catalog.FamilyParams("ortho_sum", n=3))
