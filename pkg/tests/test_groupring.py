import random
from fractions import Fraction

import pytest

from twistfloer.errors import RankMismatch
from twistfloer.groupring import (GroupRingElement, laurent, monomial,
                                  omega_hom, one, t_poly, zero)
from twistfloer.novikov import series


def random_element(rng, rank=1, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(-3, 3) for _ in range(rank))
        terms[exps] = rng.randint(-5, 5)
    return laurent(rank, terms)


class TestArithmetic:
    def test_add_cancels(self):
        a = t_poly({0: 1, 1: -1})
        b = t_poly({1: 1})
        assert a + b == one(1)

    def test_rank_two_sum(self):
        a = monomial(2, (1, 0))
        b = monomial(2, (0, 1))
        s = a + b
        assert s.rank == 2 and len(s.terms) == 2

    def test_add_inverse(self):
        rng = random.Random(5)
        for _ in range(30):
            a = random_element(rng, rank=2)
            assert (a + (-a)).is_zero()

    def test_difference_of_squares(self):
        a = t_poly({0: 1, 1: -1})
        b = t_poly({0: 1, 1: 1})
        assert a * b == t_poly({0: 1, 2: -1})

    def test_unit_product(self):
        assert t_poly({1: 1}) * t_poly({-1: 1}) == one(1)

    def test_square(self):
        a = t_poly({0: 1, 1: -1})
        assert a * a == t_poly({0: 1, 1: -2, 2: 1})

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            one(1) + one(2)
        with pytest.raises(RankMismatch):
            one(1) * one(2)


class TestUnits:
    def test_signed_monomials(self):
        assert t_poly({3: -1}).is_unit()
        assert not t_poly({0: 1, 1: -1}).is_unit()
        assert not t_poly({0: 2}).is_unit()

    def test_unit_inverse(self):
        u = monomial(2, (1, -2), -1)
        assert u * u.unit_inverse() == one(2)


class TestAugmentation:
    def test_basic(self):
        assert t_poly({0: 1, 1: -1}).augment() == 0
        assert t_poly({2: 3, -1: 4}).augment() == 7
        assert zero(1).augment() == 0

    def test_multiplicative(self):
        rng = random.Random(9)
        for _ in range(50):
            a = random_element(rng)
            b = random_element(rng)
            assert (a * b).augment() == a.augment() * b.augment()


class TestToNovikov:
    def test_one_minus_t_maps_to_one_minus_td(self):
        d = 4
        img = t_poly({0: 1, 1: -1}).to_novikov(omega_hom([d]))
        assert img == series([(0, 1), (d, -1)])

    def test_collision_cancels(self):
        a = monomial(2, (1, 0)) - monomial(2, (0, 1))
        assert a.to_novikov(omega_hom([2, 2])).is_zero()

    def test_untwisted_collapse(self):
        img = t_poly({0: 1, 1: -1}).to_novikov(omega_hom([0]))
        assert img.is_zero()

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            one(1).to_novikov(omega_hom([1, 2]))

    def test_ring_homomorphism(self):
        rng = random.Random(21)
        w = omega_hom([Fraction(3, 2), Fraction(-1, 3)])
        for _ in range(50):
            a = random_element(rng, rank=2)
            b = random_element(rng, rank=2)
            assert (a + b).to_novikov(w) == \
                a.to_novikov(w) + b.to_novikov(w)
            assert (a * b).to_novikov(w) == \
                a.to_novikov(w) * b.to_novikov(w)

    def test_units_stay_single_term(self):
        rng = random.Random(2)
        for _ in range(30):
            exps = tuple(rng.randint(-4, 4) for _ in range(2))
            u = monomial(2, exps, rng.choice([1, -1]))
            w = omega_hom([rng.randint(-3, 3), Fraction(rng.randint(1, 5), 2)])
            assert len(u.to_novikov(w).terms) == 1
