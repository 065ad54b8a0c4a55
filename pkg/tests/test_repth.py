"""Irreps, Clebsch-Gordan tables, and the tensor-product R-matrix."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ospq.repth import (
    cgc,
    irrep,
    mat_eq,
    mat_eye,
    mat_is_zero,
    mat_mul,
    mat_sub,
    r_matrix,
    r_matrix_inverse,
    rep_apply,
    rep_tensor_apply,
    verify_rep_identity,
)
from ospq.scalar import ONE, Scalar, eval_numeric, qh, sqrt_kbracket
from ospq.ualg import UElement, u_E, u_coproduct, u_g, u_mul, u_Vm, u_Vp


def failures(reports):
    return [r for r in reports if r["status"] != "pass"]


class TestIrrep:
    def test_shape(self):
        rho = irrep(3, 1)
        assert rho.dim == 7
        assert rho.weights == [3, 2, 1, 0, -1, -2, -3]
        assert rho.parities == [1, 0, 1, 0, 1, 0, 1]

    def test_invalid_labels(self):
        with pytest.raises(ValueError):
            irrep(-1)
        with pytest.raises(ValueError):
            irrep(2, lam=2)

    def test_fundamental_matrices(self):
        rho = irrep(1, 0)
        half = Scalar.from_fraction(Fraction(1, 2))
        assert rho.matH[0][0] == half
        assert rho.matH[1][1].is_zero()
        assert rho.matH[2][2] == -half
        # both raising entries collapse to 1: sqrt{2} cancels the 1/sqrt{2}
        assert rho.matVp[0][1] == ONE
        assert rho.matVp[1][2] == ONE
        # lowering picks up (-1)^(l-m-1)
        assert rho.matVm[1][0] == -ONE
        assert rho.matVm[2][1] == ONE
        g = rho.mat_g()
        assert g[0][0] == qh(1) and g[1][1] == ONE and g[2][2] == qh(-1)

    def test_defining_relations(self):
        assert failures(verify_rep_identity("relations", 3)) == []

    def test_tensor_weights_add(self):
        rho1, rho2 = irrep(1, 0), irrep(1, 1)
        m = rep_tensor_apply(u_coproduct(u_E(0, 1, 0)), rho1, rho2)
        for i, m1 in enumerate(rho1.weights):
            for j, m2 in enumerate(rho2.weights):
                r = i * rho2.dim + j
                assert m[r][r] == Scalar.from_fraction(Fraction(m1 + m2, 2))


@settings(max_examples=20, deadline=None)
@given(
    a1=st.integers(0, 2),
    d1=st.integers(0, 2),
    j1=st.integers(-1, 1),
    a2=st.integers(0, 2),
    d2=st.integers(0, 2),
    b2=st.integers(0, 1),
)
def test_rep_apply_is_multiplicative(a1, d1, j1, a2, d2, b2):
    rho = irrep(2, 0)
    x = UElement.monomial(a=a1, m=j1, d=d1)
    y = UElement.monomial(a=a2, b=b2, d=d2)
    assert mat_eq(
        rep_apply(u_mul(x, y), rho), mat_mul(rep_apply(x, rho), rep_apply(y, rho))
    )


class TestCgc:
    def test_triangle_enforced(self):
        with pytest.raises(ValueError):
            cgc(1, 1, 3)

    def test_coupling_to_top(self):
        t = cgc(1, 1, 2, 0)
        assert t.get(1, 1, 2) == ONE
        want = sqrt_kbracket(2) * sqrt_kbracket(4).inv()
        assert t.get(0, 1, 1) == want * qh(-1)
        assert t.get(1, 0, 1) == want * qh(1)

    def test_phase_convention(self):
        # C(l1 l2 l; l1, l-l1, l) is positive at q = 1/2 for every table
        for l1 in range(3):
            for l2 in range(3):
                for l in range(abs(l1 - l2), l1 + l2 + 1):
                    for lam in (0, 1):
                        top = cgc(l1, l2, l, lam).get(l1, l - l1, l)
                        assert float(eval_numeric(top, Fraction(1, 2))) > 0

    def test_coupled_top_is_highest_weight(self):
        # the m = l column must be annihilated by Delta(V+)
        l1, l2 = 2, 1
        rho1, rho2 = irrep(l1, 0), irrep(l2, 0)
        raise_t = rep_tensor_apply(u_coproduct(u_Vp()), rho1, rho2)
        for l in range(l1 - l2, l1 + l2 + 1):
            t = cgc(l1, l2, l, 0)
            col = []
            for i, m1 in enumerate(rho1.weights):
                for j, m2 in enumerate(rho2.weights):
                    col.append(t.get(m1, m2, l))
            out = [
                sum((row[j] * col[j] for j in range(len(col))), Scalar.zero())
                for row in raise_t
            ]
            assert all(v.is_zero() for v in out)

    def test_pseudo_orthogonality(self):
        assert failures(verify_rep_identity("cgc_ortho", 2)) == []

    def test_round_trip(self):
        assert failures(verify_rep_identity("cgc_reverse", 2)) == []


class TestRMatrix:
    def test_fundamental_corner(self):
        # highest-weight corner of the (1,1) block is exactly q
        assert r_matrix(1, 1)[0][0] == qh(2)

    def test_trivial_leg_gives_identity(self):
        assert mat_eq(r_matrix(0, 2), mat_eye(5))
        assert mat_eq(r_matrix(2, 0), mat_eye(5))

    def test_intertwines_coproduct(self):
        for bounds in ((1, 1), (1, 2)):
            assert failures(verify_rep_identity("intertwine", bounds)) == []

    def test_inverse_both_sides(self):
        for l1, l2 in ((1, 1), (1, 2)):
            r = r_matrix(l1, l2)
            rinv = r_matrix_inverse(l1, l2)
            eye = mat_eye(len(r))
            assert mat_eq(mat_mul(r, rinv), eye)
            assert mat_eq(mat_mul(rinv, r), eye)

    def test_yang_baxter(self):
        for bounds in ((1, 1, 1), (1, 1, 2)):
            assert failures(verify_rep_identity("ybe", bounds)) == []

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            verify_rep_identity("nonsense")
