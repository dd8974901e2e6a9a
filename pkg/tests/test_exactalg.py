from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algcoh.exactalg import (
    ONE,
    ZERO,
    NotDivisible,
    RationalFunctionExpr,
    UniPoly,
    exact_divide,
    geometric,
    is_palindromic,
    monomial,
    series_coefficients,
    substitute_power,
)

from conftest import polys


def P(*cs):
    return UniPoly(cs)


class TestUniPoly:
    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(1, 2, 0, 0).coeffs == (1, 2)

    def test_zero_degree_is_sentinel(self):
        assert ZERO.degree is None
        assert P(0, 0).degree is None
        assert ONE.degree == 0

    def test_coefficients_are_exact(self):
        p = P(Fraction(1, 3)) * 3
        assert p == ONE
        assert P("1/2", 1).coeffs[0] == Fraction(1, 2)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            UniPoly([0.5])

    def test_rendering(self):
        assert P(1, 1, 1, 1).to_str() == "1 + t + t^2 + t^3"
        assert P(0, -2, 0, Fraction(3, 4)).to_str() == "-2*t + 3/4*t^3"
        assert ZERO.to_str() == "0"
        assert P(1, Fraction(1, 2)).to_list() == ["1", "1/2"]

    def test_list_round_trip(self):
        p = P(1, Fraction(-5, 7), 0, 3)
        assert UniPoly.from_list(p.to_list()) == p

    def test_evaluate(self):
        assert P(1, 4, 6, 4, 1)(1) == 16
        assert P(1, 1)(Fraction(1, 2)) == Fraction(3, 2)

    def test_constants_compare_and_hash_like_numbers(self):
        assert P(3) == 3
        assert hash(P(3)) == hash(3)

    def test_geometric(self):
        assert geometric(4) == P(1, 1, 1, 1)
        assert geometric(3, 2) == P(1, 0, 1, 0, 1)
        assert geometric(0) == ZERO


class TestExactDivide:
    def test_geometric_factorization(self):
        assert exact_divide(P(1, 0, 0, 0, -1), P(1, -1)) == P(1, 1, 1, 1)

    @given(polys())
    def test_divide_by_one(self, p):
        assert exact_divide(p, ONE) == p

    def test_not_divisible_carries_remainder(self):
        # by hand: 1 + t + t^2 - t^4 - t^5 = (t + t^2)(1 - t^3) + 1
        num = P(1, 1, 1, 0, -1, -1)
        with pytest.raises(NotDivisible) as err:
            exact_divide(num, P(1, 0, 0, -1))
        q, r = num.divmod(P(1, 0, 0, -1))
        assert err.value.remainder == r == ONE
        assert q * P(1, 0, 0, -1) + r == num

    def test_degree_too_small(self):
        with pytest.raises(NotDivisible):
            exact_divide(P(1, 1, 1), P(1, 0, 0, -1))

    def test_correct_numerator_divides(self):
        num = P(1, 1, 1) * P(1, 0, 0, 0, -1)
        assert exact_divide(num, P(1, 0, 0, -1)) == P(1, 1, 1, 1)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(ONE, ZERO)

    @given(polys(), polys(nonzero=True))
    def test_divide_product(self, a, b):
        assert exact_divide(a * b, b) == a


class TestRingAxioms:
    @given(polys(), polys(), polys())
    def test_associative_add(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(polys(), polys(), polys())
    @settings(max_examples=50)
    def test_associative_mul(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(polys(), polys(), polys())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys(), polys())
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(polys())
    def test_additive_inverse(self, a):
        assert (a - a).is_zero()

    @given(polys(max_degree=3), st.integers(0, 5))
    def test_pow_matches_repeated_mul(self, a, n):
        expected = ONE
        for _ in range(n):
            expected = expected * a
        assert a ** n == expected


class TestSubstitutePower:
    def test_cube(self):
        assert substitute_power(P(1, 1, 1), 3) == P(1, 0, 0, 1, 0, 0, 1)

    def test_square_of_binomial(self):
        assert substitute_power(P(1, 1) ** 2, 2) == P(1, 0, 2, 0, 1)

    @given(polys())
    def test_identity(self, p):
        assert substitute_power(p, 1) == p

    @given(polys(max_degree=4), st.integers(1, 4), st.integers(1, 4))
    def test_composition(self, p, j, k):
        assert substitute_power(substitute_power(p, j), k) == substitute_power(p, j * k)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            substitute_power(ONE, 0)


class TestPalindromic:
    def test_examples(self):
        assert is_palindromic(P(1, 1, 1), 2)
        assert not is_palindromic(P(1, 2), 1)
        assert is_palindromic(P(1, 1, 1, 1), 3)

    def test_top_degree_matters(self):
        # 1 + t is symmetric about 1/2 but not about 1
        assert not is_palindromic(P(1, 1), 2)
        assert is_palindromic(P(0, 1), 2)

    def test_degree_above_top(self):
        assert not is_palindromic(P(1, 0, 1), 1)


def _geometric_product_oracle(kmax):
    # [s^k] 1/((1-s)(1-st)) = sum_{i<=k} t^i, by multiplying the two series term by term
    out = []
    for k in range(kmax + 1):
        acc = ZERO
        for i in range(k + 1):
            acc = acc + monomial(i)
        out.append(acc)
    return out


class TestSeriesCoefficients:
    def test_two_geometric_factors(self):
        expr = RationalFunctionExpr.build([ONE], [(1, 0), (1, 1)])
        assert series_coefficients(expr, 2) == [P(1), P(1, 1), P(1, 1, 1)]
        assert series_coefficients(expr, 8) == _geometric_product_oracle(8)

    def test_cancelling_expression(self):
        expr = RationalFunctionExpr.build({0: ONE, 1: P(0, -1)}, [(1, 1)])
        assert series_coefficients(expr, 3) == [ONE, ZERO, ZERO, ZERO]

    def test_general_genus_two_numerator(self):
        expr = RationalFunctionExpr.build({0: ONE, 2: P(0, 1), 4: P(0, 0, 1)}, [(1, 0), (1, 1)])
        assert series_coefficients(expr, 2)[2] == P(1, 2, 1)

    def test_t_only_factor_divides_exactly(self):
        # (1 - t)(1 + s) / (1 - t) = 1 + s
        expr = RationalFunctionExpr.build({0: P(1, -1), 1: P(1, -1)}, [(0, 1)])
        assert series_coefficients(expr, 2) == [ONE, ONE, ZERO]

    def test_t_only_factor_not_divisible(self):
        expr = RationalFunctionExpr.build([ONE], [(0, 1)])
        with pytest.raises(NotDivisible):
            series_coefficients(expr, 1)

    @given(
        st.lists(polys(max_degree=3), min_size=1, max_size=4),
        st.lists(st.tuples(st.integers(1, 3), st.integers(0, 3)), min_size=1, max_size=3),
        st.integers(0, 8),
    )
    @settings(max_examples=60)
    def test_clearing_denominators(self, num, den, kmax):
        expr = RationalFunctionExpr.build(num, den)
        series = series_coefficients(expr, kmax)
        # multiply back by each (1 - s^e t^a), truncating at kmax
        for e, a in den:
            series = [
                c - (series[k - e].shift(a) if k >= e else ZERO) for k, c in enumerate(series)
            ]
        expected = [num[k] if k < len(num) else ZERO for k in range(kmax + 1)]
        assert series == expected

    def test_bad_factor(self):
        with pytest.raises(ValueError):
            RationalFunctionExpr.build([ONE], [(0, 0)])
