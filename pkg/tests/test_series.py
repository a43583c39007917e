from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permwords import (
    NOCB_WORD_SERIES,
    PAIR_SERIES_CAB,
    PAIR_SERIES_CABB,
    PAIR_SERIES_CAB_RUN,
    SEGMENT_SERIES,
    IntPolynomial,
    RationalFunction,
    count_nocb_words,
    count_segments_nocb,
    expand,
    rf_equal,
    solve_linear,
    verify_functional_equations,
)
from permwords.series import ONE, X, rf

# Coefficients 2..14 of the three pair series, frozen against
# brute_count_pairs with the matching rule sets.
CAB_COEFFS = (1, 6, 26, 102, 386, 1441, 5353, 19854, 73612, 272940,
              1012137, 3753696, 13922343)
CABB_COEFFS = (1, 6, 26, 102, 386, 1441, 5352, 19842, 73524, 272425,
               1009481, 3741026, 13864914)
RUN_COEFFS = (1, 6, 26, 102, 386, 1441, 5352, 19842, 73523, 272412,
              1009378, 3740381, 13861393)

small_polys = st.builds(
    IntPolynomial,
    st.lists(st.integers(-9, 9), min_size=0, max_size=5).map(tuple),
)


def longdiv_expand(f: RationalFunction, order: int) -> list[Fraction]:
    """Power-series long division, written independently of expand()."""
    num = [Fraction(f.num.coefficient(i)) for i in range(order + 1)]
    den = [Fraction(f.den.coefficient(i)) for i in range(order + 1)]
    out: list[Fraction] = []
    for m in range(order + 1):
        acc = num[m] - sum(den[j] * out[m - j] for j in range(1, m + 1))
        out.append(acc / den[0])
    return out


class TestIntPolynomial:
    def test_strips_trailing_zeros(self):
        assert IntPolynomial((1, 0, 0)).coeffs == (1,)
        assert IntPolynomial((0,)).coeffs == ()
        assert IntPolynomial(()).is_zero()

    def test_degree_and_coefficient(self):
        p = IntPolynomial((1, -3, 1))
        assert p.degree == 2
        assert p.coefficient(1) == -3
        assert p.coefficient(10) == 0

    def test_arithmetic(self):
        p = IntPolynomial((1, -3, 1))
        assert (p - ONE).coeffs == (0, -3, 1)
        assert (-p).coeffs == (-1, 3, -1)
        assert (p * 2).coeffs == (2, -6, 2)
        assert ((X + ONE) ** 2).coeffs == (1, 2, 1)

    def test_evaluate_exact(self):
        p = IntPolynomial((1, -3, 1))
        assert p.evaluate(Fraction(1, 2)) == Fraction(-1, 4)
        assert p.evaluate(0) == 1

    def test_derivative(self):
        assert IntPolynomial((1, -3, 1)).derivative().coeffs == (-3, 2)
        assert ONE.derivative().is_zero()

    def test_format_terms(self):
        assert IntPolynomial((1, -3, 1)).format_terms() == "1-3x+x^2"
        assert IntPolynomial((1, -3, 1)).format_terms(descending=True) == "x^2-3x+1"
        assert IntPolynomial(()).format_terms() == "0"
        assert X.format_terms() == "x"

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=200, deadline=None)
    def test_ring_laws(self, p, q, r):
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert p + q == q + p
        assert (p - q) + q == p

    @given(small_polys, small_polys, st.integers(-3, 3))
    @settings(max_examples=200, deadline=None)
    def test_evaluation_is_a_homomorphism(self, p, q, x):
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


class TestRationalFunction:
    def test_rejects_zero_den_constant_term(self):
        with pytest.raises(ValueError):
            RationalFunction(ONE, X)

    def test_equality_cross_multiplies(self):
        half = rf(X, IntPolynomial((2,)) * (ONE - X))
        also_half = rf(X * 2, IntPolynomial((4,)) * (ONE - X))
        assert half == also_half
        assert rf_equal(half, also_half)
        assert half != rf(X, ONE - X)

    def test_arithmetic(self):
        a = rf(ONE, ONE - X)
        b = rf(X, ONE - X)
        assert a - b == rf(ONE)
        assert a * (ONE - X) == rf(ONE)
        assert a / a == rf(ONE)

    def test_solve_linear(self):
        # f = x f + 1 has the unique solution 1/(1-x).
        f = solve_linear(rf(X), rf(ONE))
        assert f == rf(ONE, ONE - X)
        with pytest.raises(ValueError):
            solve_linear(rf(ONE), rf(ONE))

    @given(small_polys, small_polys)
    @settings(max_examples=100, deadline=None)
    def test_solve_linear_satisfies_equation(self, a_num, b_num):
        a = rf(X * a_num, ONE + X)  # constant term 0 keeps a != 1
        b = rf(b_num, ONE + X)
        f = solve_linear(a, b)
        assert f == a * f + b


class TestExpand:
    def test_matches_long_division(self):
        cases = [
            SEGMENT_SERIES,
            NOCB_WORD_SERIES,
            PAIR_SERIES_CAB,
            PAIR_SERIES_CABB,
            PAIR_SERIES_CAB_RUN,
            rf(IntPolynomial((3, 1)), IntPolynomial((2, 0, -1, 5))),
        ]
        for f in cases:
            mine = expand(f, 20)
            theirs = longdiv_expand(f, 20)
            assert [Fraction(c) for c in mine] == theirs

    def test_integer_coefficients_stay_ints(self):
        for c in expand(SEGMENT_SERIES, 10):
            assert isinstance(c, int)

    def test_segment_series_counts_segments(self):
        coeffs = expand(SEGMENT_SERIES, 10)
        assert coeffs[0] == 0
        for n in range(1, 11):
            assert coeffs[n] == count_segments_nocb(n)

    def test_nocb_series_counts_words(self):
        coeffs = expand(NOCB_WORD_SERIES, 10)
        for n in range(11):
            assert coeffs[n] == count_nocb_words(n)


class TestPinnedClosedForms:
    def test_segment_series(self):
        assert SEGMENT_SERIES.num.coeffs == (0, 1)
        assert SEGMENT_SERIES.den.format_terms() == "1-3x+x^2"

    def test_nocb_series(self):
        assert NOCB_WORD_SERIES.num.coeffs == (1,)
        assert NOCB_WORD_SERIES.den.format_terms() == "1-4x+x^2"

    def test_pair_series_cab(self):
        assert PAIR_SERIES_CAB.num.coeffs == (0, 0, 1, -2)
        assert PAIR_SERIES_CAB.den.coeffs == (1, -8, 22, -26, 14, -5, 1)

    def test_pair_series_cabb(self):
        assert PAIR_SERIES_CABB.num.coeffs == (0, 0, 1, -4, 4)
        assert PAIR_SERIES_CABB.den.coeffs == (
            1, -10, 38, -70, 66, -33, 12, -6, 4, -1,
        )

    def test_pair_series_cab_run(self):
        assert PAIR_SERIES_CAB_RUN.num.coeffs == (0, 0, 1, -2, -1, 1)
        assert PAIR_SERIES_CAB_RUN.den.coeffs == (1, -8, 21, -19, -2, 11, -6, 1)

    def test_frozen_expansions(self):
        assert tuple(expand(PAIR_SERIES_CAB, 14)[2:]) == CAB_COEFFS
        assert tuple(expand(PAIR_SERIES_CABB, 14)[2:]) == CABB_COEFFS
        assert tuple(expand(PAIR_SERIES_CAB_RUN, 14)[2:]) == RUN_COEFFS

    def test_series_are_ordered(self):
        h = expand(PAIR_SERIES_CAB, 20)
        k = expand(PAIR_SERIES_CABB, 20)
        t = expand(PAIR_SERIES_CAB_RUN, 20)
        for n in range(2, 21):
            assert t[n] <= k[n] <= h[n]


class TestFunctionalEquations:
    def test_statuses_and_outcomes(self):
        checks = {c.name: c for c in verify_functional_equations(pair_cap=8)}
        assert set(checks) == {"pairs-cab", "pairs-cabb", "pairs-cab-run"}
        assert checks["pairs-cab"].status == "exact"
        assert checks["pairs-cab"].residual_num == ()
        assert checks["pairs-cabb"].status == "exact"
        assert checks["pairs-cabb"].residual_num == ()
        assert checks["pairs-cab-run"].status == "unverifiable-as-printed"
        assert checks["pairs-cab-run"].oracle_matches is True
        for c in checks.values():
            assert c.ok, c
