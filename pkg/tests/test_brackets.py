"""q-brackets, two-term differences, and factored bracket products."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmice.brackets import (BracketProduct, beta, bracket, bracket_limit_at_one,
                             bracket_ratio, qdiff)
from asmice.laurent import (GridViolation, LaurentPoly, NonDivisible, RatFunc)


def lp(terms, scale=1):
    return LaurentPoly(1, scale, {(k,): c for k, c in terms.items()})


# ---------- qdiff and bracket values ----------

def test_qdiff_basic_values():
    assert qdiff(0).is_zero
    assert qdiff(1) == lp({1: 1, -1: -1})
    assert qdiff(3) == lp({3: 1, -3: -1})
    assert qdiff(Fraction(1, 2), scale=2) == lp({1: 1, -1: -1}, scale=2)
    with pytest.raises(GridViolation):
        qdiff(Fraction(1, 2))


def test_beta_is_the_unit_difference():
    assert beta() == qdiff(1)
    assert beta(scale=4) == qdiff(1, scale=4)


def test_bracket_values():
    assert bracket(0).is_zero
    assert bracket(1) == LaurentPoly.one()
    assert bracket(2) == lp({1: 1, -1: 1})
    assert bracket(3) == lp({2: 1, 0: 1, -2: 1})
    with pytest.raises(NonDivisible):
        bracket(Fraction(1, 2))


@given(st.integers(-8, 8))
def test_bracket_is_odd(a):
    assert bracket(-a) == bracket(a) * -1


@given(st.integers(-6, 6), st.integers(-6, 6))
def test_bracket_exchange_identity(a, b):
    lhs = bracket(a) * bracket(b) - bracket(a + 1) * bracket(b - 1)
    assert lhs == bracket(a - b + 1)


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_difference_exchange_identity_on_the_quarter_grid(p, q):
    a, b = Fraction(p, 4), Fraction(q, 4)
    lhs = qdiff(a, 4) * qdiff(b, 4) - qdiff(a + 1, 4) * qdiff(b - 1, 4)
    assert lhs == qdiff(1, 4) * qdiff(a - b + 1, 4)


def test_bracket_ratio_matches_polynomial_bracket():
    for a in (-3, 0, 1, 2, 5):
        assert bracket_ratio(a) == RatFunc(bracket(a))
    half = bracket_ratio(Fraction(1, 2), scale=2)
    assert half * half == bracket_ratio(Fraction(1, 2), 2) ** 2
    assert not half.is_poly


# ---------- factored products ----------

def test_product_one_and_monomial():
    assert BracketProduct.one().limit_at_one() == 1
    m = BracketProduct.monomial(-9)
    assert m.unit_expo == -9 and m.limit_at_one() == 1


def test_diff_normalizes_negative_arguments():
    d = BracketProduct.diff(-3)
    assert d.diffs == {3: 1} and d.coeff == -1
    assert BracketProduct.diff(-3, 2).coeff == 1


def test_diff_zero_argument_gives_zero_product():
    z = BracketProduct.diff(0)
    assert z.zero and z.limit_at_one() == 0
    assert z.expand_ratfunc().is_zero
    with pytest.raises(ZeroDivisionError):
        BracketProduct.diff(0, -1)


def test_bracket_factor_balances_unit_differences():
    f = BracketProduct.bracket_factor(3)
    assert f.diffs == {3: 1, 1: -1}
    assert f.net_diff_power == 0
    assert f.limit_at_one() == 3
    assert BracketProduct.bracket_factor(1) == BracketProduct.one()


def test_product_algebra():
    a = BracketProduct.bracket_factor(3)
    b = BracketProduct.bracket_factor(2)
    prod = a * b
    assert prod.limit_at_one() == 6
    assert (prod / b).limit_at_one() == 3
    assert (b ** 2).limit_at_one() == 4
    assert (b ** -1).limit_at_one() == Fraction(1, 2)
    assert (a * 5).limit_at_one() == 15
    assert (a / 3).limit_at_one() == 1


def test_limit_unbalanced_cases():
    assert BracketProduct.diff(2).limit_at_one() == 0         # net > 0
    with pytest.raises(NonDivisible):
        BracketProduct.diff(2, -1).limit_at_one()             # pole


def test_limit_alias():
    assert bracket_limit_at_one(BracketProduct.bracket_factor(4)) == 4


def test_expand_ratfunc_matches_direct_polynomials():
    p = BracketProduct(Fraction(2), -1, {3: 1, 1: -1})
    expanded = p.expand_ratfunc()
    direct = RatFunc(lp({-1: 2}) * qdiff(3), qdiff(1))
    assert expanded == direct


def test_equality_is_extensional():
    # d(3)/d(1) == [3] == unit^2 + 1 + unit^-2 as expanded values
    a = BracketProduct.bracket_factor(3)
    b = BracketProduct.diff(3) / BracketProduct.diff(1)
    assert a == b


def test_float_eval_approaches_the_exact_limit():
    p = BracketProduct.bracket_factor(3)
    for k in (4, 6, 8):
        approx = p.float_eval(1 + 10 ** -k)
        assert abs(approx - 3) < 10 ** -(k - 2)


def test_power_of_zero():
    z = BracketProduct.diff(0)
    assert (z ** 3).zero
    assert (z ** 0) == BracketProduct.one()
    with pytest.raises(ZeroDivisionError):
        z ** -1
    with pytest.raises(ZeroDivisionError):
        BracketProduct.one() / z
