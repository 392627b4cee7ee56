"""Shared oracles and random generators for the test suite.

The oracles here are deliberately independent of the library code
paths they check: Smith invariant factors via determinantal divisors,
determinants via Bareiss elimination, series products via a plain
dictionary convolution.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from twistfloer.complexes import FreeChainComplex, chain_complex, chain_map
from twistfloer.novikov import INF, NovikovSeries, monomial, one, series
from twistfloer.rings import NOVIKOV, mat_mul, zero_of


# --- integer-matrix oracles -------------------------------------------

def bareiss_det(M) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [[int(x) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def minor_det(M, rows, cols) -> int:
    return bareiss_det([[M[i][j] for j in cols] for i in rows])


def determinantal_invariant_factors(M):
    """Invariant factors via determinantal divisors: the k-th divisor is
    the gcd of all k x k minors, and the factors are successive
    quotients.  Brute force, textbook-independent of any elimination."""
    m, n = len(M), len(M[0]) if M else 0
    divisors = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, abs(minor_det(M, rows, cols)))
        if g == 0:
            break
        divisors.append(g)
    factors = []
    prev = 1
    for d in divisors:
        factors.append(d // prev)
        prev = d
    return tuple(factors)


def random_int_matrix(rng, rows, cols, bound):
    return [[rng.randint(-bound, bound) for _ in range(cols)]
            for _ in range(rows)]


# --- Novikov-series oracles --------------------------------------------

def dict_convolution(a: NovikovSeries, b: NovikovSeries) -> dict:
    """Plain dictionary product of the stored terms, no cutoff logic."""
    acc = {}
    for e1, c1 in a.terms:
        for e2, c2 in b.terms:
            acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + c1 * c2
    return {e: c for e, c in acc.items() if c != 0}


def random_exact_series(rng, max_terms=6) -> NovikovSeries:
    """Random exact series with exponents in (1/6)Z intersected with
    [-5, 5] and small rational coefficients."""
    n = rng.randint(0, max_terms)
    terms = []
    for _ in range(n):
        e = Fraction(rng.randint(-30, 30), 6)
        c = Fraction(rng.randint(-9, 9), rng.choice([1, 1, 2, 3]))
        terms.append((e, c))
    return series(terms)


def random_nonzero_series(rng, max_terms=6) -> NovikovSeries:
    while True:
        s = random_exact_series(rng, max_terms)
        if not s.is_zero():
            return s


def random_unit_series(rng) -> NovikovSeries:
    """Nonzero exact series suitable as an acyclic-piece differential."""
    choices = [
        one(),
        monomial(Fraction(rng.randint(-2, 2))),
        monomial(Fraction(rng.randint(-4, 4), 2), rng.choice([1, -1, 2])),
        series([(0, 1), (rng.randint(1, 3), -1)]),
        series([(Fraction(-1, 2), 1), (Fraction(3, 2), rng.choice([1, -1]))]),
    ]
    return rng.choice(choices)


# --- random chain complexes over the Novikov field ----------------------

def _transvect(entries, i_name, j_name, lam):
    """Basis change e_i <- e_i + lam * e_j (same degree) on a sparse
    differential dict {(src, dst): value}."""
    outgoing = {t: v for (s, t), v in entries.items() if s == j_name}
    for t, v in outgoing.items():
        key = (i_name, t)
        entries[key] = entries.get(key, zero_of(NOVIKOV)) + lam * v
    incoming = {s: v for (s, t), v in entries.items() if t == i_name}
    for s, v in incoming.items():
        key = (s, j_name)
        entries[key] = entries.get(key, zero_of(NOVIKOV)) - lam * v


def random_field_complex(rng, max_pieces=4, with_mixing=True):
    """Random complex over the Novikov field with known homology.

    Built from elementary pieces (either a single free generator, or an
    acyclic two-term piece) and then obscured by random transvections,
    which preserve homology.  Returns (complex, dims) with dims the
    expected nonzero homology dimensions per degree.
    """
    gens = []
    entries = {}
    expected = {}
    n_pieces = rng.randint(1, max_pieces)
    for i in range(n_pieces):
        deg = Fraction(rng.randint(-4, 4), 2)
        if rng.random() < 0.6:
            gens.append((f"a{i}", deg))
            gens.append((f"b{i}", deg - 1))
            entries[(f"a{i}", f"b{i}")] = random_unit_series(rng)
        else:
            gens.append((f"c{i}", deg))
            expected[deg] = expected.get(deg, 0) + 1
    if with_mixing:
        by_degree = {}
        for n, d in gens:
            by_degree.setdefault(d, []).append(n)
        lams = [one(), monomial(1), monomial(-1), monomial(Fraction(1, 2)),
                series([(0, 2)]), series([(0, 1), (1, 1)])]
        for _ in range(rng.randint(0, 6)):
            degree = rng.choice(sorted(by_degree))
            names = by_degree[degree]
            if len(names) < 2:
                continue
            i_name, j_name = rng.sample(names, 2)
            _transvect(entries, i_name, j_name, rng.choice(lams))
    C = chain_complex(NOVIKOV, gens,
                      [(s, t, v) for (s, t), v in sorted(entries.items())])
    return C, expected


def random_null_homotopic_map(rng, C, D):
    """A chain map C -> D of the form dh + hd for a random degree-(+1)
    linear map h; always a chain map, always nullhomotopic."""
    h_entries = {}
    for cn, cd in C.generators:
        for dn, dd in D.generators:
            if dd == cd + 1 and rng.random() < 0.4:
                h_entries[(cn, dn)] = random_unit_series(rng)

    def h_matrix(k):
        srcs = C.gens_at(k)
        dsts = D.gens_at(k + 1)
        z = zero_of(NOVIKOV)
        return [[h_entries.get((s, t), z) for s in srcs] for t in dsts]

    ents = []
    degrees = sorted(set(C.degrees()) | set(D.degrees()))
    for k in degrees:
        srcs = C.gens_at(k)
        dsts = D.gens_at(k)
        n = len(srcs)
        F = mat_mul(NOVIKOV, D.matrix(k + 1), h_matrix(k), cols=n)
        G = mat_mul(NOVIKOV, h_matrix(k - 1), C.matrix(k), cols=n)
        for i, t in enumerate(dsts):
            for j, s in enumerate(srcs):
                v = F[i][j] + G[i][j]
                if v.terms:
                    ents.append((s, t, v))
    return chain_map(C, D, ents)


def scaled_identity_map(rng, C):
    lam = random_unit_series(rng)
    return chain_map(C, C, [(n, n, lam) for n, _ in C.generators]), lam
