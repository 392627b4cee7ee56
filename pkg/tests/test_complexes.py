import random
from fractions import Fraction

import pytest

from twistfloer.complexes import (FreeChainComplex, chain_complex, chain_map,
                                  compose_chain_maps, homology_field,
                                  homology_integer, homology_laurent,
                                  identity_chain_map, les_of_cone,
                                  mapping_cone, rank_field, tensor_over_field,
                                  verify_complex)
from twistfloer.errors import (InsufficientPrecision, NotChainMap,
                               UnsupportedComplex)
from twistfloer.groupring import laurent, t_poly
from twistfloer.modules import (CyclicSummand, FreeSummand, TrivialZSummand,
                                check_classification)
from twistfloer.novikov import monomial, one, series, zero
from twistfloer.rings import INTEGER, NOVIKOV, laurent_ring
from twistfloer.snf import smith_normal_form

from helpers import (random_field_complex, random_null_homotopic_map,
                     scaled_identity_map)


def two_term_laurent(p, top=Fraction(1, 2)):
    return chain_complex(
        laurent_ring(1),
        [("x+", top), ("x-", top - 1)],
        [("x+", "x-", p)])


def two_term_field(p, top=Fraction(1, 2)):
    return chain_complex(
        NOVIKOV,
        [("x+", top), ("x-", top - 1)],
        [] if p.is_zero() else [("x+", "x-", p)])


class TestVerify:
    def test_two_term_ok(self):
        assert verify_complex(two_term_laurent(t_poly({0: 1, 1: -1})))

    def test_dd_nonzero_detected(self):
        C = chain_complex(
            laurent_ring(1),
            [("a", 2), ("b", 1), ("c", 0)],
            [("a", "b", t_poly({0: 1})),
             ("b", "c", t_poly({0: 1, 1: -1}))])
        diag = verify_complex(C)
        assert not diag
        assert any("d*d" in p for p in diag.problems)

    def test_empty_complex(self):
        assert verify_complex(chain_complex(laurent_ring(1), [], []))

    def test_bad_degree_drop(self):
        C = chain_complex(INTEGER, [("a", 2), ("b", 0)], [("a", "b", 1)])
        diag = verify_complex(C)
        assert not diag and "degree" in diag.problems[0]


class TestRankField:
    def test_insufficient_precision(self):
        unknown = series([], trunc=5)
        with pytest.raises(InsufficientPrecision):
            rank_field([[unknown]])

    def test_truncated_but_decided(self):
        e = series([(0, 1), (1, 1)], trunc=10)
        assert rank_field([[e]]) == 1

    def test_deterministic_pivoting(self):
        M = [[monomial(2), monomial(0)], [monomial(1), monomial(3)]]
        assert rank_field(M) == 2


class TestHomologyField:
    def test_acyclic_for_nonzero_d(self):
        C = two_term_field(series([(0, 1), (3, -1)]))
        H = homology_field(C)
        assert H.entries == ((Fraction(-1, 2), 0), (Fraction(1, 2), 0))

    def test_split_for_zero_map(self):
        C = two_term_field(zero())
        H = homology_field(C)
        assert H.entries == ((Fraction(-1, 2), 1), (Fraction(1, 2), 1))

    def test_zero_differential_rank_five(self):
        C = chain_complex(NOVIKOV, [(f"g{i}", 0) for i in range(5)], [])
        assert homology_field(C).entries == ((Fraction(0), 5),)

    def test_rank_nullity_audit(self):
        rng = random.Random(31)
        for _ in range(40):
            C, expected = random_field_complex(rng)
            H = homology_field(C)
            total_h = sum(dim for _, dim in H.entries)
            ranks = sum(rank_field(C.matrix(k)) for k in C.degrees())
            assert C.total_rank() == total_h + 2 * ranks
            assert {d: m for d, m in H.entries if m} == expected


class TestHomologyInteger:
    def test_mod_two(self):
        C = chain_complex(INTEGER, [("a", 1), ("b", 0)], [("a", "b", 2)])
        H = homology_integer(C)
        assert H.at(0).classification == (CyclicSummand(2),)
        assert H.at(1).classification == ()

    def test_zero_complex(self):
        C = chain_complex(INTEGER, [], [])
        assert homology_integer(C).entries == ()

    def test_zero_map_gives_free(self):
        C = chain_complex(INTEGER, [("a", 1), ("b", 0)], [])
        H = homology_integer(C)
        assert H.at(0).classification == (FreeSummand(1),)
        assert H.at(1).classification == (FreeSummand(1),)

    def test_certificates_replay(self):
        C = chain_complex(
            INTEGER,
            [("a", 1), ("b", 1), ("x", 0), ("y", 0), ("z", 0)],
            [("a", "x", 2), ("a", "y", 4), ("b", "y", 6), ("b", "z", 0)])
        H = homology_integer(C)
        for _, mod in H.entries:
            assert check_classification(mod)


class TestHomologyLaurent:
    def test_one_minus_t(self):
        H = homology_laurent(two_term_laurent(t_poly({0: 1, 1: -1})))
        assert H.at(Fraction(-1, 2)).classification == (TrivialZSummand(),)
        assert H.at(Fraction(1, 2)).classification == ()
        for _, mod in H.entries:
            assert check_classification(mod)

    def test_zero_differential_free(self):
        C = chain_complex(laurent_ring(1), [("a", 1), ("b", 0)], [])
        H = homology_laurent(C)
        assert H.at(0).classification == (FreeSummand(1),)
        assert H.at(1).classification == (FreeSummand(1),)

    def test_one_minus_t_squared(self):
        H = homology_laurent(two_term_laurent(t_poly({0: 1, 2: -1})))
        bottom = H.at(Fraction(-1, 2))
        assert bottom.classification == \
            (CyclicSummand(t_poly({0: 1, 2: -1}), abelian_rank=2),)
        assert check_classification(bottom)
        # companion oracle: reduce exponents modulo 2 over a window of
        # generators; the relations become identifications e_j = e_{j+2},
        # whose Smith form certifies a free abelian group of rank 2
        k, window = 2, 9
        rel = []
        for j in range(window - k):
            row = [0] * window
            row[j] += 1
            row[j + k] -= 1
            rel.append(row)
        snf = smith_normal_form(rel)
        factors = snf.invariant_factors()
        assert all(f == 1 for f in factors)
        assert window - len(factors) == 2

    def test_unit_pivot_collapse(self):
        # differential with a unit entry: the unit kills a generator pair
        # and leaves one free class at the bottom
        C = chain_complex(
            laurent_ring(1),
            [("a", 1), ("x", 0), ("y", 0)],
            [("a", "x", t_poly({2: 1})), ("a", "y", t_poly({0: 1, 1: 1}))])
        H = homology_laurent(C)
        assert H.at(1).classification == ()
        bottom = H.at(0)
        assert bottom.ngens == 2
        assert bottom.classification == (FreeSummand(1),)
        assert check_classification(bottom)

    def test_unsupported_residual(self):
        # kernel of [2, 1-t] is invisible to unit-pivot elimination
        C = chain_complex(
            laurent_ring(1),
            [("a", 1), ("b", 1), ("x", 0)],
            [("a", "x", t_poly({0: 2})), ("b", "x", t_poly({0: 1, 1: -1}))])
        with pytest.raises(UnsupportedComplex):
            homology_laurent(C)

    def test_rank_two_unclassified(self):
        C = chain_complex(
            laurent_ring(2),
            [("a", 1), ("b", 0)],
            [("a", "b", laurent(2, {(0, 0): 1, (1, 0): -1}))])
        H = homology_laurent(C)
        assert H.at(0).classification is None
        assert H.at(0).relations


class TestTensor:
    def test_unit_factor(self):
        rng = random.Random(17)
        C, _ = random_field_complex(rng)
        U = chain_complex(NOVIKOV, [("u", 0)], [])
        T = tensor_over_field(C, U)
        assert verify_complex(T)
        assert [d for _, d in T.generators] == [d for _, d in C.generators]
        got = {(s.split(")x(")[0][1:], t.split(")x(")[0][1:]): v
               for s, t, v in T.entries}
        assert got == {(s, t): v for s, t, v in C.entries}

    def test_kunneth_convolution(self):
        rng = random.Random(23)
        for _ in range(25):
            C, hc = random_field_complex(rng, max_pieces=3)
            D, hd = random_field_complex(rng, max_pieces=3)
            T = tensor_over_field(C, D)
            assert verify_complex(T)
            H = {d: m for d, m in homology_field(T).entries if m}
            conv = {}
            for dc, mc in hc.items():
                for dd, md in hd.items():
                    conv[dc + dd] = conv.get(dc + dd, 0) + mc * md
            assert H == conv

    def test_acyclic_factor_kills_everything(self):
        rng = random.Random(29)
        A = two_term_field(series([(0, 1), (2, -1)]))
        for _ in range(10):
            B, _ = random_field_complex(rng)
            T = tensor_over_field(A, B)
            assert all(m == 0 for _, m in homology_field(T).entries)


class TestMappingCone:
    def test_identity_cone_acyclic(self):
        rng = random.Random(37)
        C, _ = random_field_complex(rng)
        cone = mapping_cone(identity_chain_map(C))
        assert verify_complex(cone)
        assert all(m == 0 for _, m in homology_field(cone).entries)

    def test_zero_map_cone_splits(self):
        rng = random.Random(41)
        C, hc = random_field_complex(rng, max_pieces=3)
        D, hd = random_field_complex(rng, max_pieces=3)
        cone = mapping_cone(chain_map(C, D, []))
        H = {d: m for d, m in homology_field(cone).entries if m}
        expected = dict(hd)
        for k, m in hc.items():
            expected[k + 1] = expected.get(k + 1, 0) + m
        assert H == {k: v for k, v in expected.items() if v}

    def test_multiplication_cone_acyclic(self):
        for d in (1, -2, 5):
            C = chain_complex(NOVIKOV, [("g", 0)], [])
            f = chain_map(C, C, [("g", "g", series([(0, 1), (d, -1)]))])
            cone = mapping_cone(f)
            assert all(m == 0 for _, m in homology_field(cone).entries)

    def test_rejects_non_chain_map(self):
        C = chain_complex(NOVIKOV, [("a", 1), ("b", 0)],
                          [("a", "b", one())])
        D = chain_complex(NOVIKOV, [("a", 1), ("b", 0)], [])
        bad = chain_map(C, D, [("a", "a", one()), ("b", "b", one())])
        with pytest.raises(NotChainMap):
            mapping_cone(bad)


class TestLesOfCone:
    def test_random_maps_exact(self):
        rng = random.Random(43)
        for _ in range(20):
            C, _ = random_field_complex(rng, max_pieces=3)
            D, _ = random_field_complex(rng, max_pieces=3)
            f = random_null_homotopic_map(rng, C, D)
            report = les_of_cone(f)
            assert report.ok

    def test_iso_gives_acyclic_cone_and_zero_composites(self):
        rng = random.Random(47)
        C, _ = random_field_complex(rng)
        f, _ = scaled_identity_map(rng, C)
        report = les_of_cone(f)
        assert report.ok
        assert all(m == 0 for _, m in report.dim_cone)
        assert report.source_to_target_is_iso()

    def test_acyclic_cone_implies_iso(self):
        rng = random.Random(53)
        for _ in range(10):
            C, _ = random_field_complex(rng, max_pieces=3)
            f0 = random_null_homotopic_map(rng, C, C)
            lam, _ = scaled_identity_map(rng, C)
            ents = {(s, t): v for s, t, v in lam.entries}
            for s, t, v in f0.entries:
                key = (s, t)
                ents[key] = ents[key] + v if key in ents else v
            f = chain_map(C, C, [(s, t, v) for (s, t), v in ents.items()])
            report = les_of_cone(f)
            assert report.ok
            if all(m == 0 for _, m in report.dim_cone):
                assert report.source_to_target_is_iso()
