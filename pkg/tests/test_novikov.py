import random
from fractions import Fraction

import pytest

from twistfloer.errors import NotExact, ZeroUpToPrecision
from twistfloer.novikov import (INF, NovikovSeries, invert, monomial, one,
                                series, zero)

from helpers import dict_convolution, random_exact_series, random_nonzero_series


class TestCanonicalization:
    def test_sorts_and_keeps_exact(self):
        s = series([(2, -1), (0, 1)])
        assert s.terms == ((Fraction(0), Fraction(1)),
                           (Fraction(2), Fraction(-1)))
        assert s.is_exact

    def test_cancellation_to_zero(self):
        assert series([(1, 2), (1, -2)]) == zero()

    def test_truncation_drops_high_terms(self):
        s = series([(0, 1), (5, 7)], trunc=3)
        assert s.terms == ((Fraction(0), Fraction(1)),)
        assert s.trunc == Fraction(3)

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(50):
            s = random_exact_series(rng)
            assert series(s.terms, s.trunc) == s

    def test_string_inputs(self):
        s = series([("1/2", "3"), ("-2", "-1/3")])
        assert s.terms == ((Fraction(-2), Fraction(-1, 3)),
                           (Fraction(1, 2), Fraction(3)))


class TestAddition:
    def test_cancel_constants(self):
        a = series([(0, 1), (1, 1)])
        b = series([(0, -1), (1, 1)])
        assert a + b == series([(1, 2)])

    def test_trunc_is_min(self):
        a = series([(0, 1)], trunc=2)
        b = series([(3, 1)])
        out = a + b
        assert out.terms == ((Fraction(0), Fraction(1)),)
        assert out.trunc == Fraction(2)

    def test_completes_to_one(self):
        d = 5
        a = series([(0, 1), (d, -1)])
        assert a + series([(d, 1)]) == one()


class TestMultiplication:
    def test_difference_of_squares(self):
        a = series([(0, 1), (1, -1)])
        b = series([(0, 1), (1, 1)])
        assert a * b == series([(0, 1), (2, -1)])

    def test_truncated_geometric_telescope(self):
        # (1 - t) * (1 + t + t^2 + t^3 truncated at 4): convolution
        # oracle says the stored product is exactly 1 with cutoff 4
        d = 1
        a = series([(0, 1), (d, -1)])
        b = series([(k * d, 1) for k in range(4)], trunc=4 * d)
        raw = dict_convolution(a, b)
        assert {e: c for e, c in raw.items() if e < 4} == {Fraction(0): 1}
        out = a * b
        assert out.terms == ((Fraction(0), Fraction(1)),)
        assert out.trunc == Fraction(4)

    def test_rational_exponents_add(self):
        assert monomial(Fraction(1, 2)) * monomial(Fraction(3, 2)) \
            == monomial(2)

    def test_zero_is_absorbing_exactly(self):
        a = series([(0, 1)], trunc=5)
        assert (a * zero()).is_zero()

    def test_scalar(self):
        assert 2 * series([(1, 3)]) == series([(1, 6)])


class TestValuation:
    def test_basic(self):
        assert series([(0, 1), (3, -1)]).valuation() == 0

    def test_zero_series(self):
        assert zero().valuation() == INF

    def test_unknown_leading_term(self):
        s = series([], trunc=2)
        with pytest.raises(ZeroUpToPrecision):
            s.valuation()

    def test_additive_on_products(self):
        rng = random.Random(11)
        for _ in range(100):
            a = random_nonzero_series(rng)
            b = random_nonzero_series(rng)
            assert (a * b).valuation() == a.valuation() + b.valuation()


class TestInvert:
    def test_geometric_series(self):
        # oracle: sum of t^(2k) strictly below 7
        expected = series([(e, 1) for e in (0, 2, 4, 6)], trunc=7)
        got = invert(series([(0, 1), (2, -1)]), 7)
        assert got == expected

    def test_monomial(self):
        got = invert(monomial(3), 5)
        assert got == series([(-3, 1)], trunc=5)

    def test_negative_valuation_factor(self):
        # 1 - t^-1 = -t^-1 (1 - t), so the inverse is -t(1 + t + ...)
        got = invert(series([(0, 1), (-1, -1)]), 3)
        assert got == series([(1, -1), (2, -1)], trunc=3)

    def test_errors(self):
        with pytest.raises(ZeroDivisionError):
            invert(zero(), 5)
        with pytest.raises(NotExact):
            invert(series([(0, 1)], trunc=2), 5)

    def test_product_is_one_below_reach(self):
        rng = random.Random(13)
        for _ in range(60):
            a = random_nonzero_series(rng)
            p = Fraction(rng.randint(5, 20))
            b = invert(a, p)
            prod = a * b
            assert prod.agrees_with(one())
            assert prod.trunc == p + a.valuation()
            # bumping the internal precision certifies agreement below p
            bumped = a * invert(a, p + max(0, -a.valuation()))
            assert bumped.trunc >= p
            assert all(c == 0 for e, c in (bumped - one()).terms if e < p)


class TestFieldAxioms:
    def test_axioms_on_random_series(self):
        rng = random.Random(3)
        for _ in range(80):
            a = random_exact_series(rng)
            b = random_exact_series(rng)
            c = random_exact_series(rng)
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + zero() == a
            assert a * one() == a
