"""genfun 子包：闭式生成函数与枚举对照。"""

import pytest

from wonderful_braid.cohomology.poincare import poincare
from wonderful_braid.errors import DomainError
from wonderful_braid.genfun.bigpsi import bigpsi_direct, bigpsi_formula, extract_poincare_from_bigpsi
from wonderful_braid.genfun.minimal import lambda_series, phi_series, psi_series, w_poly, w_series
from wonderful_braid.genfun.supermax import (
    _reject_bare_z,
    euler_real_series,
    phi_super_series,
    y_substitution,
    z_substitution,
    z_substitution_chain,
)
from wonderful_braid.genfun.trees import (
    automorphisms,
    rooted_trees,
    tree_sum,
    tree_sum_check,
    tree_sum_target,
)
from wonderful_braid.genfun.xi import gamma_series, xi_direct, xi_direct_coefficient, xi_series, xi_terms
from wonderful_braid.series.egf import EgfSeries
from wonderful_braid.series.poly import POLY_RING, Q, Y, Z, as_integer, q_poly, z_slice


class TestMinimal:
    @pytest.mark.parametrize(
        "n, coefficients",
        [(2, [1]), (3, [1, 1]), (4, [1, 5, 1]), (5, [1, 16, 16, 1])],
    )
    def test_phi_coefficients(self, n, coefficients):
        assert phi_series(6).egf_coefficient(n) == q_poly(coefficients)

    def test_phi_low_order_terms(self):
        phi = phi_series(5)
        assert not phi.coefficient(0)
        assert phi.coefficient(1) == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_phi_matches_basis_enumeration(self, n):
        assert phi_series(6).egf_coefficient(n) == poincare("minimal", n)

    def test_lambda_starts_with_t(self):
        lam = lambda_series(4)
        assert lam.coefficient(1) == 1
        with pytest.raises(DomainError):
            lambda_series(0)

    def test_w_poly(self):
        assert w_poly(2) == POLY_RING.one
        assert w_poly(3) == 1 + 3 * Z
        assert w_poly(4) == 1 + 10 * Z + 15 * Z**2
        with pytest.raises(DomainError):
            w_poly(1)

    def test_w_series_is_ordinary(self):
        w = w_series(4)
        assert w.coefficient(4) == w_poly(4)
        assert not w.coefficient(1)

    def test_psi_coefficients(self):
        psi = psi_series(5)
        assert psi.egf_coefficient(2) == 1
        assert psi.egf_coefficient(3) == (1 + Q) * (1 + 3 * Z)
        assert psi.egf_coefficient(4) == (1 + 5 * Q + Q**2) * (1 + 10 * Z + 15 * Z**2)
        with pytest.raises(DomainError):
            psi_series(1)


class TestXi:
    def test_printed_coefficients(self):
        xi = xi_series(5)
        assert xi.egf_coefficient(3) == 3 * Y + Q + 1
        assert xi.egf_coefficient(4) == (
            30 * Y * Z * (1 + Q) + 15 * Y**2 + 10 * Y * (1 + Q) + Q**2 + 5 * Q + 1
        )
        assert xi.egf_coefficient(5) == (
            (315 * Q**2 + 1305 * Q + 315) * Y * Z**2
            + ((315 * Q + 315) * Y**2 + (210 * Q**2 + 870 * Q + 210) * Y) * Z
            + 105 * Y**3
            + (105 * Q + 105) * Y**2
            + (25 * Q**2 + 95 * Q + 25) * Y
            + Q**3 + 16 * Q**2 + 16 * Q + 1
        )

    def test_formula_matches_direct_enumeration(self):
        formula = xi_series(5)
        direct = xi_direct(5)
        for n in range(1, 6):
            assert formula.egf_coefficient(n) == direct.egf_coefficient(n)

    @pytest.mark.slow
    def test_formula_matches_direct_enumeration_at_six(self):
        assert xi_series(6).egf_coefficient(6) == xi_direct_coefficient(6)

    def test_direct_terms_for_n_three(self):
        records = list(xi_terms(3))
        assert len(records) == 3
        assert all(r.r == 0 and r.N_rS == 1 and r.ell == 1 for r in records)
        assert sum((r.contribution() for r in records), POLY_RING.zero) == 3 * Y

    def test_direct_terms_for_n_four_first_order_in_z(self):
        total = sum(
            (r.contribution() for r in xi_terms(4) if r.r == 1 and r.ell == 1),
            POLY_RING.zero,
        )
        assert total == 30 * Y * Z * (1 + Q)

    def test_direct_single_point(self):
        assert xi_direct_coefficient(1) == 1
        with pytest.raises(DomainError):
            xi_direct_coefficient(0)

    def test_gamma_starts_with_y_psi(self):
        gamma = gamma_series(4)
        assert gamma.egf_coefficient(2) == Y
        assert not gamma.coefficient(1)

    def test_xi_needs_order_two(self):
        with pytest.raises(DomainError):
            xi_series(1)


class TestSupermaxSeries:
    def test_y_substitution(self):
        assert y_substitution(0) == 1
        assert y_substitution(1) == 0
        assert y_substitution(3) == Q + Q**2

    def test_z_substitution(self):
        assert z_substitution(0) == 1
        assert z_substitution(1) == 0
        assert z_substitution(2) == Q
        assert z_substitution(3) == Q + Q**2
        assert z_substitution(4) == Q + 7 * Q**2 + Q**3

    @pytest.mark.parametrize("r", range(8))
    def test_z_substitution_forms_agree(self, r):
        assert z_substitution_chain(r) == z_substitution(r)

    @pytest.mark.parametrize(
        "n, coefficients",
        [(2, [1]), (3, [1, 1]), (4, [1, 20, 1]), (5, [1, 226, 226, 1])],
    )
    def test_phi_super(self, n, coefficients):
        assert phi_super_series(5).egf_coefficient(n) == q_poly(coefficients)

    def test_phi_super_matches_basis_at_four(self):
        assert phi_super_series(4).egf_coefficient(4) == poincare("supermaximal", 4)

    @pytest.mark.slow
    def test_phi_super_matches_basis_at_five(self):
        assert phi_super_series(5).egf_coefficient(5) == poincare("supermaximal", 5)

    def test_euler_real(self):
        real = euler_real_series(5)
        assert as_integer(real.egf_coefficient(2)) == 1
        assert as_integer(real.egf_coefficient(3)) == 0
        assert as_integer(real.egf_coefficient(4)) == -18
        assert as_integer(real.egf_coefficient(5)) == 0

    def test_bare_z_is_rejected(self):
        with pytest.raises(DomainError):
            _reject_bare_z(EgfSeries.from_coefficients([0, Z], 1))


class TestBigPsi:
    def test_printed_slices(self):
        psi = bigpsi_formula(6)
        assert psi.egf_coefficient(1) == 1
        assert z_slice(psi.egf_coefficient(4), 0) == 1
        assert z_slice(psi.egf_coefficient(5), 1) == 16 * Q + 6 * Q**2 + Q**3
        assert z_slice(psi.egf_coefficient(6), 2) == 10 * Q**2

    def test_formula_matches_direct(self):
        assert bigpsi_formula(6) == bigpsi_direct(6)

    @pytest.mark.slow
    def test_formula_matches_direct_through_t8(self):
        assert bigpsi_formula(8) == bigpsi_direct(8)

    def test_single_block_contribution(self):
        # n = 3 时唯一的单块支撑 {1,2,3}，标号 1
        assert z_slice(bigpsi_direct(3).egf_coefficient(3), 1) == Q

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_extraction(self, n):
        assert extract_poincare_from_bigpsi(n) == poincare("minimal", n)

    @pytest.mark.slow
    def test_extraction_at_seven(self):
        assert extract_poincare_from_bigpsi(7) == poincare("minimal", 7)

    def test_extraction_needs_enough_terms(self):
        with pytest.raises(DomainError):
            extract_poincare_from_bigpsi(5, bigpsi_formula(7))
        assert extract_poincare_from_bigpsi(5, bigpsi_formula(8)) == q_poly([1, 16, 16, 1])

    def test_rejects_bad_order(self):
        with pytest.raises(DomainError):
            bigpsi_formula(0)
        with pytest.raises(DomainError):
            bigpsi_direct(0)


class TestTrees:
    def test_tree_counts(self):
        assert [len(rooted_trees(m)) for m in range(1, 6)] == [1, 1, 2, 4, 9]

    def test_automorphisms(self):
        assert automorphisms(()) == 1
        assert automorphisms(((), (), ())) == 6
        assert automorphisms((((),), ((),))) == 2

    @pytest.mark.parametrize("order", [2, 3, 4, 5])
    def test_identity(self, order):
        assert tree_sum(order) == tree_sum_target(order)
        assert tree_sum_check(order)

    @pytest.mark.slow
    def test_identity_at_six(self):
        assert len(rooted_trees(6)) == 20
        assert tree_sum_check(6)

    def test_target_matches_gamma(self):
        target = tree_sum_target(4)
        gamma = gamma_series(4)
        for n in range(5):
            assert target.coefficient(n) * Y == gamma.coefficient(n)

    def test_check_needs_order_two(self):
        with pytest.raises(DomainError):
            tree_sum_check(1)
