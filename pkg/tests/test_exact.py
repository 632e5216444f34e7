"""Exact arithmetic layer: rationals, powers, square roots, ExpPoly."""

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topoidx.errors import DivisionByZero, UnsupportedEvaluation
from topoidx.exact import ExpPoly, exact_sqrt, general_pow, rat, rat_pow, sqrt_sum


class TestRationals:
    def test_reduction(self):
        n = 6
        assert rat(4, n - 2) == 1

    def test_inverse_pair(self):
        assert F(2, 3) * F(3, 2) == 1

    def test_wheel_hub_kernel_expression(self):
        # (3/(n-2))^2 + n^2 + 3n^2/(n-2) at n=5 reduces to 1 + 25 + 25.
        n = 5
        value = F(3, n - 2) ** 2 + F(n * n) + F(3 * n * n, n - 2)
        assert value == 51

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            rat(1, 0)

    @given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
    def test_reduction_idempotent(self, num, den):
        r = F(num, den)
        assert F(r.numerator, r.denominator) == r
        assert r.denominator > 0


class TestPowers:
    def test_negative_power(self):
        assert rat_pow(F(2, 3), -1) == F(3, 2)

    def test_square_of_cycle_kernel(self):
        assert rat_pow(12, 2) == 144

    def test_zeroth_power(self):
        assert rat_pow(5, 0) == 1

    def test_zero_to_negative(self):
        with pytest.raises(DivisionByZero):
            rat_pow(0, -1)

    def test_general_integral_is_exact(self):
        assert general_pow(F(2, 3), 2) == F(4, 9)
        assert isinstance(general_pow(F(2, 3), F(4, 2)), F)

    def test_general_fractional_is_float(self):
        value = general_pow(4, F(1, 2))
        assert isinstance(value, float)
        assert value == pytest.approx(2.0, rel=1e-9)

    def test_general_fractional_negative_base(self):
        with pytest.raises(UnsupportedEvaluation):
            general_pow(-4, F(1, 2))


class TestSqrt:
    def test_perfect_squares(self):
        assert exact_sqrt(4) == 2
        assert exact_sqrt(F(9, 4)) == F(3, 2)
        assert exact_sqrt(0) == 0

    def test_irrational(self):
        assert exact_sqrt(2) is None

    def test_sum_stays_exact_when_possible(self):
        assert sqrt_sum([F(4), F(9, 4)]) == F(7, 2)
        assert isinstance(sqrt_sum([F(2), F(2)]), float)


class TestExpPoly:
    def test_merge(self):
        assert ExpPoly([(9, 1), (9, 1)]) == ExpPoly({9: 2})

    def test_monomial_product_adds_exponents(self):
        assert ExpPoly.monomial(27) * ExpPoly.monomial(37) == ExpPoly.monomial(64)

    def test_factored_wheel_polynomial_expands(self):
        # 4x^9 (x^4 + 1) = 4x^13 + 4x^9
        product = ExpPoly.monomial(9, 4) * ExpPoly([(4, 1), (0, 1)])
        assert product == ExpPoly({13: 4, 9: 4})

    def test_eval_at_one_is_coefficient_sum(self):
        p = ExpPoly({27: 4, 37: 4})
        assert p.evaluate(1) == 8

    def test_derivative_at_one(self):
        p = ExpPoly({27: 4, 37: 4})
        assert p.derivative_at_one() == 4 * 27 + 4 * 37 == 256

    def test_constant_eval(self):
        assert ExpPoly.monomial(0).evaluate(1) == 1

    def test_eval_integer_exponents_exact(self):
        p = ExpPoly({2: 3, -1: 2})
        assert p.evaluate(F(1, 2)) == F(3, 4) + 4

    def test_eval_fractional_exponent_rejected_off_one(self):
        p = ExpPoly({F(1, 2): 1})
        assert p.evaluate(1) == 1
        with pytest.raises(UnsupportedEvaluation):
            p.evaluate(2)

    def test_eval_negative_exponent_needs_positive_x(self):
        p = ExpPoly({-2: 1})
        with pytest.raises(UnsupportedEvaluation):
            p.evaluate(0)

    def test_render_canonical(self):
        p = ExpPoly({37: 4, 27: 4})
        assert p.render() == "4*x^37 + 4*x^27"
        assert ExpPoly({F(175, 4): 4, 12: 4}).render() == "4*x^175/4 + 4*x^12"
        assert ExpPoly().render() == "0"

    def test_parse_inverts_render(self):
        p = ExpPoly({F(175, 4): 4, 12: 4, 0: 1})
        assert ExpPoly.parse(p.render()) == p
        assert ExpPoly.parse("0") == ExpPoly()

    def test_scalar_multiply(self):
        assert 3 * ExpPoly({2: 1, 0: 2}) == ExpPoly({2: 3, 0: 6})

    def test_zero_coefficients_dropped(self):
        assert ExpPoly([(5, 1), (5, -1)]).is_zero()

    def test_immutable(self):
        p = ExpPoly({1: 1})
        with pytest.raises(AttributeError):
            p._terms = {}

    @given(st.lists(
        st.tuples(
            st.fractions(min_value=-20, max_value=20, max_denominator=12),
            st.integers(min_value=-50, max_value=50),
        ),
        max_size=8,
    ))
    def test_render_parse_round_trip(self, terms):
        p = ExpPoly(terms)
        assert ExpPoly.parse(p.render()) == p

    @given(
        st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), max_size=6),
        st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), max_size=6),
    )
    def test_addition_matches_eval(self, a_terms, b_terms):
        a, b = ExpPoly(a_terms), ExpPoly(b_terms)
        x = F(3, 2)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
