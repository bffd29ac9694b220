"""Half-integral Laurent polynomial and rational-function kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmice.laurent import (GridViolation, LaurentPoly, NonDivisible, RatFunc,
                            divide_exact, limit_at_one, vanishing_order_at_one)


def lp(terms, scale=1):
    return LaurentPoly(1, scale, {(k,): c for k, c in terms.items()})


small_polys = st.builds(
    lp,
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5),
    st.sampled_from([1, 2, 3]),
)


# ---------- construction and the exponent grid ----------

def test_unit_power_places_half_integer_exponents():
    t = LaurentPoly.unit_power(2)          # t^(2/2) = t
    assert t == LaurentPoly(1, 1, {(2,): 1})
    half = LaurentPoly.unit_power(1)       # t^(1/2)
    assert half * half == t


def test_var_power_accepts_grid_rationals():
    assert LaurentPoly.var_power(Fraction(3, 2)) == LaurentPoly.unit_power(3)
    assert LaurentPoly.var_power(Fraction(1, 3), scale=3) == \
        LaurentPoly.unit_power(2, scale=3)


def test_var_power_rejects_off_grid_exponent():
    with pytest.raises(GridViolation):
        LaurentPoly.var_power(Fraction(1, 3))


def test_rescale_refines_but_never_coarsens():
    p = LaurentPoly.unit_power(1)                      # t^(1/2) at scale 1
    q = p.rescale(2)
    assert q.scale == 2 and q == p
    with pytest.raises(GridViolation):
        q.rescale(3)


def test_mixed_scale_arithmetic_promotes_to_common_grid():
    a = LaurentPoly.unit_power(1, scale=2)             # t^(1/4)
    b = LaurentPoly.unit_power(1, scale=3)             # t^(1/6)
    s = a + b
    assert s.scale == 6
    assert s.eval_units(Fraction(64)) == 64 ** 3 + 64 ** 2


def test_constant_helpers():
    assert LaurentPoly.zero().is_zero
    assert LaurentPoly.one().as_scalar() == 1
    assert LaurentPoly.const(7).as_scalar() == 7
    with pytest.raises(ValueError):
        LaurentPoly.unit_power(1).as_scalar()


# ---------- arithmetic ----------

def test_square_of_half_power_binomial():
    p = LaurentPoly.unit_power(1) + LaurentPoly.unit_power(-1)
    sq = p * p
    assert sq == lp({2: 1, 0: 2, -2: 1})


def test_scalar_operations():
    p = lp({2: 1, 0: -1})
    assert p * 3 == lp({2: 3, 0: -3})
    assert 3 * p == p * 3
    assert p + 1 == lp({2: 1})
    assert 1 + p == p + 1
    assert p - 1 == lp({2: 1, 0: -2})
    assert -p == lp({2: -1, 0: 1})


@given(small_polys, small_polys, small_polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_equality_across_scales():
    assert lp({1: 1}, scale=1) == lp({2: 1}, scale=2)
    assert lp({1: 1}, scale=1) != lp({1: 1}, scale=2)


def test_two_variable_terms():
    p = LaurentPoly(2, 1, {(1, -2): 3, (0, 0): 1})
    q = p * p
    assert q == LaurentPoly(2, 1, {(2, -4): 9, (1, -2): 6, (0, 0): 1})
    assert p.eval_units(2, 3) == 3 * 2 * Fraction(1, 9) + 1


# ---------- exact division ----------

def test_divide_one_by_unit_monomial():
    one = LaurentPoly.one()
    t = LaurentPoly.unit_power(2)
    assert divide_exact(one, t) == LaurentPoly.unit_power(-2)


def test_divide_difference_by_half_power_difference():
    num = lp({2: 1, -2: -1})                       # t - t^(-1)
    den = lp({1: 1, -1: -1})                       # t^(1/2) - t^(-1/2)
    assert divide_exact(num, den) == lp({1: 1, -1: 1})


def test_divide_rejects_nonfactor():
    num = lp({2: 1, 0: 1})                         # t + 1
    den = lp({2: 1, 0: -1})                        # t - 1
    with pytest.raises(NonDivisible):
        divide_exact(num, den)


def test_divide_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divide_exact(LaurentPoly.one(), LaurentPoly.zero())


@given(small_polys, small_polys.filter(lambda q: not q.is_zero))
def test_divide_recovers_factor(p, q):
    assert divide_exact(p * q, q) == p


def test_divide_two_variable_product():
    p = LaurentPoly(2, 1, {(1, 0): 1, (0, 1): -1})
    q = LaurentPoly(2, 1, {(2, 2): 1, (0, 0): 5})
    assert divide_exact(p * q, q) == p
    with pytest.raises(NonDivisible):
        divide_exact(LaurentPoly(2, 1, {(1, 0): 1, (0, 0): 1}), p)


# ---------- rational functions ----------

def test_ratfunc_equality_by_cross_multiplication():
    num, den = lp({1: 1, -1: -1}), lp({2: 1, -2: -1})
    a = RatFunc(num, den)
    extra = lp({3: 2, 0: 5})
    b = RatFunc(num * extra, den * extra)
    assert a == b


def test_ratfunc_monomial_denominator_folds_away():
    r = RatFunc(lp({2: 1, 0: 1}), lp({2: 3}))
    assert r.is_poly
    assert r.poly() == lp({0: Fraction(1, 3), -2: Fraction(1, 3)})


def test_ratfunc_arithmetic():
    half = RatFunc(LaurentPoly.one(), lp({1: 1, -1: -1}))
    t = RatFunc(LaurentPoly.unit_power(2))
    assert half + half == 2 * half
    assert half - half == RatFunc(LaurentPoly.zero())
    assert (half * t) / t == half
    assert half ** -2 == (half * half).reciprocal()
    assert 1 / half == half.reciprocal()
    with pytest.raises(ZeroDivisionError):
        half / RatFunc(LaurentPoly.zero())


def test_ratfunc_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(LaurentPoly.one(), LaurentPoly.zero())


def test_ratfunc_poly_raises_on_true_quotient():
    r = RatFunc(LaurentPoly.one(), lp({2: 1, 0: 1}))
    assert not r.is_poly
    with pytest.raises(NonDivisible):
        r.poly()


def test_ratfunc_eval_units():
    r = RatFunc(lp({2: 1, 0: -1}), lp({1: 1, 0: -1}))   # (t-1)/(t^(1/2)-1)
    assert r.eval_units(2) == Fraction(3, 1)             # (4-1)/(2-1)
    with pytest.raises(ZeroDivisionError):
        r.eval_units(1)


# ---------- limits at the unit point ----------

def test_vanishing_order():
    d1 = lp({1: 1, -1: -1})
    order, cof = vanishing_order_at_one(d1)
    assert order == 1 and cof.subs_all_one() != 0
    assert vanishing_order_at_one(d1 ** 3)[0] == 3
    assert vanishing_order_at_one(LaurentPoly.const(5))[0] == 0
    with pytest.raises(ValueError):
        vanishing_order_at_one(LaurentPoly.zero())


def test_limit_matched_orders():
    d3, d1 = lp({3: 1, -3: -1}), lp({1: 1, -1: -1})
    assert limit_at_one(RatFunc(d3, d1)) == 3
    assert limit_at_one(RatFunc(d3 * d3, d1 * d1)) == 9


def test_limit_higher_numerator_order_is_zero():
    d1 = lp({1: 1, -1: -1})
    assert limit_at_one(RatFunc(d1, LaurentPoly.const(4))) == 0
    assert limit_at_one(RatFunc(LaurentPoly.zero(), d1)) == 0


def test_limit_pole_is_detected():
    d1 = lp({1: 1, -1: -1})
    with pytest.raises(NonDivisible):
        limit_at_one(RatFunc(d1, d1 * d1))


# ---------- display ----------

def test_format():
    assert LaurentPoly.zero().format() == "0"
    assert lp({2: 1, 0: -3}).format() == "t - 3"
    assert lp({1: 1}).format() == "t^(1/2)"
    assert LaurentPoly(2, 1, {(2, -1): 4}).format() == "4*t*u^(-1/2)"
