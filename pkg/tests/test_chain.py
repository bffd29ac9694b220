"""The merged-parameter limit chain from the determinant formula to counts."""

from fractions import Fraction

import pytest

from asmice.chain import (a_via_chain, ean_normalize, half_spec_value,
                          ik_eps_product, ik_eps_ratfunc, q_fourth_root,
                          tau_poly, z_half_eps_brute, z_half_eps_product)
from asmice.dets import EpsilonGrid
from asmice.transfer import transfer_count


def test_fourth_root_bookkeeping():
    for x in (1, 2, 3):
        q4 = q_fourth_root(x)
        lam = q4 ** 2 + q4.inverse() ** 2
        assert lam.is_rational() and lam.as_rational() == x - 2
        beta_sq = (q4 ** 2 - q4.inverse() ** 2) ** 2
        assert beta_sq.as_rational() == x * x - 4 * x
    with pytest.raises(ValueError):
        q_fourth_root(4)


def test_tau_at_zero_offset_is_constant():
    for x in (1, 2, 3):
        t = tau_poly(0, x)
        assert t.as_scalar() == 4 - x


def test_state_sum_equals_determinant_evaluation():
    for n in (1, 2):
        for x in (1, 2, 3):
            q4 = q_fourth_root(x)
            pref = (Fraction(-1) ** n) * q4.inverse() ** n
            assert z_half_eps_brute(n, x) == ik_eps_ratfunc(n, x) * pref


def test_state_sum_on_a_symmetric_grid():
    g = EpsilonGrid.symmetric([-3, -1, 1, 3])
    for x in (1, 3):
        q4 = q_fourth_root(x)
        pref = q4.inverse() ** 4
        assert z_half_eps_brute(4, x, g) == ik_eps_ratfunc(4, x, g) * pref


def test_factored_and_determinant_forms_agree():
    for n in (1, 2, 3):
        for x in (1, 2):
            assert ik_eps_product(n, x).expand_ratfunc() == \
                ik_eps_ratfunc(n, x)


def test_product_form_only_exists_for_ratio_cases():
    with pytest.raises(ValueError, match="factored"):
        ik_eps_product(2, 3)


def test_displayed_product_single_site():
    p1 = z_half_eps_product(1)
    assert p1.unit_expo == -1 and not p1.diffs
    assert p1.coeff == -q_fourth_root(1).inverse()


def test_displayed_product_matches_factored_evaluation():
    for n in (1, 2, 3):
        q4 = q_fourth_root(1)
        pref = (Fraction(-1) ** n) * q4.inverse() ** n
        assert z_half_eps_product(n) == ik_eps_product(n, 1) * pref


def test_counts_through_the_product_route():
    want = [1, 2, 7, 42]
    for n in (1, 2, 3, 4):
        assert a_via_chain(n, 1) == want[n - 1]
        assert a_via_chain(n, 2) == 2 ** (n * (n - 1) // 2)


def test_counts_through_the_determinant_route():
    for n in (1, 2, 3):
        assert a_via_chain(n, 1, route="det") == [1, 2, 7][n - 1]
        assert a_via_chain(n, 3, route="det") == transfer_count(n)(3)


def test_route_validation():
    with pytest.raises(ValueError, match="route"):
        a_via_chain(2, 1, route="guess")
    with pytest.raises(ValueError, match="factored"):
        a_via_chain(2, 3, route="product")


def test_merged_point_normalization():
    for n in (1, 2, 3):
        for x in (1, 2, 3):
            value = half_spec_value(n, x)
            assert ean_normalize(n, value, x) == transfer_count(n)(x)


def test_normalize_rejects_irrational_values():
    with pytest.raises((ArithmeticError, ValueError)):
        ean_normalize(1, q_fourth_root(1), 1)
