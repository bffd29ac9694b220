"""Cauchy-type and ratio determinants, the general-x matrix, block splitting."""

import random
from fractions import Fraction

import pytest

from asmice.dets import (EpsilonGrid, antidiagonal_block_det, cauchy_det_closed,
                         cauchy_matrix, general_x_matrix, s_det_closed,
                         s_det_closed_bivariate, s_det_product, s_matrix,
                         s_matrix_bivariate, sprime_det, sprime_matrix)
from asmice.laurent import LaurentPoly, RatFunc, divide_exact
from asmice.matrices import RingMatrix, det_exact


def lp(terms, scale=1):
    return LaurentPoly(1, scale, {(k,): c for k, c in terms.items()})


# ---------- reciprocal-bracket determinant ----------

def test_cauchy_single_entry():
    xs, ys = [3], [0]
    m = cauchy_matrix(xs, ys)
    assert det_exact(m) == cauchy_det_closed(xs, ys)
    assert m[0, 0] == RatFunc(lp({1: 1, -1: -1}), lp({3: 1, -3: -1}))


def test_cauchy_closed_form_matches_determinant():
    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        while True:
            xs = rng.sample([Fraction(k, 2) for k in range(2, 40)], n)
            ys = rng.sample([Fraction(k, 2) for k in range(-40, 1)], n)
            if all(x != y for x in xs for y in ys):
                break
        assert det_exact(cauchy_matrix(xs, ys)) == cauchy_det_closed(xs, ys)


def test_cauchy_validation():
    with pytest.raises(ValueError):
        cauchy_matrix([1, 1], [0, -1])          # coincident x's
    with pytest.raises(ValueError):
        cauchy_matrix([1, 2], [2, 0])           # entry pole x_i = y_j
    with pytest.raises(ValueError):
        cauchy_matrix([1, 2], [0, -1], n=3)     # length mismatch
    assert cauchy_det_closed([5], [1], n=1) == cauchy_det_closed([5], [1])


# ---------- ratio matrices ----------

def test_ratio_det_closed_form():
    for (a, b) in ((1, 3), (2, 4), (2, 6), (2, 3), (5, 2), (-1, 3)):
        for n in (1, 2, 3, 4):
            assert det_exact(s_matrix(n, a, b)) == s_det_closed(n, a, b), \
                (a, b, n)


def test_ratio_matrix_equal_arguments_has_rank_one():
    m = s_matrix(3, 2, 2)
    assert all(m[i, j] == RatFunc(LaurentPoly.one())
               for i in range(3) for j in range(3))
    assert det_exact(m).is_zero
    assert s_det_closed(2, 1, 1).num.is_zero


def test_ratio_det_rank_collapse_at_multiples():
    # a = 2b makes the matrix rank 2: zero determinant from n = 3 on
    assert s_det_product(3, 6, 3).zero
    assert det_exact(s_matrix(3, 6, 3)).is_zero
    assert not s_det_product(2, 6, 3).zero
    # a = 0 collapses to the zero matrix
    assert det_exact(s_matrix(2, 0, 3)).is_zero
    assert s_det_product(2, 0, 3).zero


def test_ratio_matrix_rejects_zero_denominator_argument():
    with pytest.raises(ValueError):
        s_matrix(2, 1, 0)


def test_bivariate_closed_form():
    for n in (1, 2, 3):
        assert det_exact(s_matrix_bivariate(n)) == s_det_closed_bivariate(n)


def test_bivariate_vanishing_orders():
    n = 3
    num = det_exact(s_matrix_bivariate(n)).num
    for k in range(n):
        factor = LaurentPoly(2, 1, {(2, 0): 1, (0, 2 * k): -1})   # s - t^k
        q = num
        for _ in range(n - k):
            q = divide_exact(q, factor)       # raises if the order is short


def test_variation_with_plus_one_entries():
    assert sprime_det(1, 1, 1) == RatFunc(LaurentPoly.one())
    for n in (1, 2, 3):
        direct = det_exact(sprime_matrix(n, 1, 3))
        assert direct == sprime_det(n, 1, 3)


def test_variation_relates_to_general_x_matrix():
    # (-1/3) M(x=3)_{ij} equals t^(i+j+1) times the plus-one ratio entry
    for n in (2, 3):
        m = general_x_matrix(EpsilonGrid.standard(n), x=3)
        sp = sprime_matrix(n, 1, 3)
        for i in range(n):
            for j in range(n):
                shift = RatFunc(LaurentPoly.var_power(i + j + 1))
                assert m[i, j] * Fraction(-1, 3) == sp[i, j] * shift
        lhs = det_exact(m) * (Fraction(-1, 3) ** n)
        rhs = sprime_det(n, 1, 3) * RatFunc(LaurentPoly.var_power(n * n))
        assert lhs == rhs


# ---------- deformation grids ----------

def test_standard_grid_differences():
    g = EpsilonGrid.standard(3)
    assert [g.g(i, j) for i in range(3) for j in range(3)] == \
        [1, 2, 3, 2, 3, 4, 3, 4, 5]
    assert g.n == 3


def test_symmetric_grid():
    g = EpsilonGrid.symmetric([-3, -1, 1, 3])
    assert g.g(0, 3) == -6 and g.g(1, 1) == 0
    with pytest.raises(ValueError):
        EpsilonGrid.symmetric([1, 2, 3])      # not antisymmetric


# ---------- the general-x matrix ----------

def test_x_one_entries():
    m = general_x_matrix(EpsilonGrid.standard(2), x=1)
    for i in range(2):
        for j in range(2):
            k = i + j + 1
            want = RatFunc(LaurentPoly.const(-3),
                           lp({2 * k: 1, 0: 1, -2 * k: 1}))
            assert m[i, j] == want


def test_x_two_entries_match_ratio_matrix():
    n = 3
    m = general_x_matrix(EpsilonGrid.standard(n), x=2)
    s = s_matrix(n, 2, 4)
    for i in range(n):
        for j in range(n):
            assert m[i, j] * Fraction(-1, 4) == s[i, j]


def test_x_zero_gives_zero_matrix():
    m = general_x_matrix(EpsilonGrid.standard(2), x=0)
    assert all(m[i, j].is_zero for i in range(2) for j in range(2))


def test_all_parameter_modes_agree_at_sample_points():
    grid = EpsilonGrid.standard(2)
    m_biv = general_x_matrix(grid)                 # both formal
    m_x1 = general_x_matrix(grid, x=1)             # s formal
    m_s2 = general_x_matrix(grid, s=2)             # x formal
    m_num = general_x_matrix(grid, x=1, s=4)       # both numeric
    for i in range(2):
        for j in range(2):
            assert m_x1[i, j].eval_units(Fraction(2)) == m_num[i, j]
            assert m_biv[i, j].eval_units(Fraction(2), Fraction(1)) == \
                m_num[i, j]
            assert m_s2[i, j].eval_units(Fraction(1)) == \
                general_x_matrix(grid, x=1, s=2)[i, j]


# ---------- antidiagonal block splitting ----------

def test_two_by_two_split():
    a = RatFunc(LaurentPoly.var_power(1))
    b = RatFunc(LaurentPoly.var_power(2) + 3)
    even, odd = antidiagonal_block_det(RingMatrix([[a, b], [b, a]]))
    assert even == a + b and odd == a - b
    assert even * odd == det_exact(RingMatrix([[a, b], [b, a]]))


def test_single_entry_split():
    m = RingMatrix([[RatFunc(LaurentPoly.const(7))]])
    even, odd = antidiagonal_block_det(m)
    assert even == RatFunc(LaurentPoly.const(7))
    assert odd == 1


def test_split_factorizes_symmetric_instances():
    for f, s in (([-1, 1], 2), ([-2, 0, 2], 3),
                 ([-3, -1, 1, 3], 2), ([-4, -2, 0, 2, 4], 3)):
        m = general_x_matrix(EpsilonGrid.symmetric(f), s=s)
        even, odd = antidiagonal_block_det(m)
        assert even * odd == det_exact(m), f


def test_split_requires_flip_symmetry():
    with pytest.raises(ValueError):
        antidiagonal_block_det(general_x_matrix(EpsilonGrid.standard(2), x=1))
