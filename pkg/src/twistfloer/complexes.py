"""Rationally graded free chain complexes and their homology.

Complexes are free over a tagged ring (integers, Laurent, or the
Novikov field), with named generators carrying rational degrees and a
sparse differential lowering degree by exactly 1.  The composite of
consecutive differentials is checked exactly.

Homology:

* over the Novikov field, dimensions via Gaussian elimination with
  minimal-valuation pivoting (division-free cross-multiplication, so
  truncated entries propagate their cutoffs honestly);
* over the integers, classified groups via Smith normal form;
* over a Laurent ring, finitely presented modules obtained by unit-pivot
  elimination, with a summand classification attempted on the result.

Mapping cones and tensor products use the sign conventions

    d(x (x) y) = dx (x) y + (-1)^floor(deg x) * x (x) dy
    d_cone(c, e) = (-d c, d e - f c)

(the floor makes the sign alternate along half-integer gradings).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (InsufficientPrecision, InvalidComplex, NotChainMap,
                     UnsupportedComplex)
from .modules import (ElementaryOpsCertificate, FinitelyPresentedModule,
                      GradedModule, SmithCertificate, classify_cyclic,
                      graded, read_summands)
from .novikov import INF
from .rings import (NOVIKOV, RingTag, is_zero, mat_mul, validate_element,
                    zero_of)
from .snf import smith_normal_form

__all__ = [
    "FreeChainComplex", "chain_complex", "Diagnostics", "verify_complex",
    "homology_field", "homology_integer", "homology_laurent",
    "tensor_over_field", "ChainMap", "chain_map", "identity_chain_map",
    "compose_chain_maps", "mapping_cone", "shift_complex", "les_of_cone",
    "ExactnessReport",
]


@dataclass(frozen=True)
class FreeChainComplex:
    """Sparse free chain complex; build with :func:`chain_complex`."""

    ring: RingTag
    generators: tuple[tuple[str, Fraction], ...]
    entries: tuple[tuple[str, str, object], ...]

    def degree_of(self, name: str) -> Fraction:
        for n, d in self.generators:
            if n == name:
                return d
        raise KeyError(name)

    def degrees(self) -> tuple[Fraction, ...]:
        return tuple(sorted({d for _, d in self.generators}))

    def gens_at(self, degree) -> tuple[str, ...]:
        degree = Fraction(degree)
        return tuple(n for n, d in self.generators if d == degree)

    def matrix(self, degree):
        """Differential out of the given degree: rows indexed by the
        generators one degree down, columns by the generators at the
        degree."""
        degree = Fraction(degree)
        srcs = self.gens_at(degree)
        dsts = self.gens_at(degree - 1)
        lookup = {(s, t): v for s, t, v in self.entries}
        z = zero_of(self.ring)
        return [[lookup.get((s, t), z) for s in srcs] for t in dsts]

    def total_rank(self) -> int:
        return len(self.generators)


def chain_complex(ring: RingTag, generators, differential) -> FreeChainComplex:
    """Canonicalizing constructor.

    ``generators`` is an iterable of (name, degree) pairs; ``differential``
    an iterable of (from, to, value) triples.  Zero values are dropped,
    entries are sorted, duplicate names or duplicate (from, to) pairs are
    rejected.
    """
    gens = tuple((str(n), Fraction(d)) for n, d in generators)
    names = [n for n, _ in gens]
    if len(set(names)) != len(names):
        raise ValueError("generator names must be unique")
    known = set(names)
    seen = set()
    ents = []
    for s, t, v in differential:
        s, t = str(s), str(t)
        if s not in known or t not in known:
            raise ValueError(f"differential references unknown generator "
                             f"{s!r} -> {t!r}")
        if (s, t) in seen:
            raise ValueError(f"duplicate differential entry {s!r} -> {t!r}")
        seen.add((s, t))
        if not validate_element(ring, v):
            raise ValueError(f"entry {v!r} not an element of {ring}")
        if is_zero(ring, v) and (ring.kind != "novikov" or v.is_zero()):
            continue
        ents.append((s, t, v))
    return FreeChainComplex(ring, gens, tuple(sorted(ents,
                                                     key=lambda e: e[:2])))


@dataclass(frozen=True)
class Diagnostics:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_complex(C: FreeChainComplex) -> Diagnostics:
    """Check that the differential lowers degree by exactly 1 and that
    all composites of consecutive differentials vanish."""
    problems = []
    for s, t, v in C.entries:
        drop = C.degree_of(s) - C.degree_of(t)
        if drop != 1:
            problems.append(
                f"differential {s!r} -> {t!r} changes degree by {-drop}")
    if not problems:
        for k in C.degrees():
            upper = C.matrix(k + 1)
            lower = C.matrix(k)
            if not upper or not lower or not upper[0] or not lower[0]:
                continue
            comp = mat_mul(C.ring, lower, upper)
            for i, row in enumerate(comp):
                for j, x in enumerate(row):
                    if not is_zero(C.ring, x):
                        problems.append(
                            f"d*d != 0 from degree {k + 1}: entry "
                            f"({i},{j}) = {x}")
    return Diagnostics(not problems, tuple(problems))


def _require_valid(C: FreeChainComplex):
    diag = verify_complex(C)
    if not diag:
        raise InvalidComplex("; ".join(diag.problems))


# --- rank over the Novikov field --------------------------------------

def rank_field(rows) -> int:
    """Rank of a matrix of Novikov series.

    Division-free Gaussian elimination: the pivot is the known-nonzero
    entry of minimal valuation (ties broken by column then row index),
    and rows are cleared by cross-multiplication, which only rescales
    them by the nonzero pivot.  Raises InsufficientPrecision when the
    remaining entries include one that is zero up to a finite cutoff, so
    its vanishing is undecidable.
    """
    M = [list(r) for r in rows]
    act_r = sorted(range(len(M)))
    act_c = sorted(range(len(M[0]))) if M else []
    rank = 0
    while True:
        best = None
        undecided = False
        for i in act_r:
            for j in act_c:
                e = M[i][j]
                if e.terms:
                    key = (e.terms[0][0], j, i)
                    if best is None or key < best:
                        best = key
                elif e.trunc != INF:
                    undecided = True
        if best is None:
            if undecided:
                raise InsufficientPrecision(
                    "an entry is zero up to a finite cutoff; its vanishing "
                    "cannot be decided")
            return rank
        _, j0, i0 = best
        pivot = M[i0][j0]
        for i in act_r:
            if i == i0:
                continue
            e = M[i][j0]
            if not e.terms and e.trunc == INF:
                continue
            M[i] = [pivot * M[i][j] - e * M[i0][j] if j in act_c else M[i][j]
                    for j in range(len(M[i]))]
        act_r.remove(i0)
        act_c.remove(j0)
        rank += 1


def homology_field(C: FreeChainComplex) -> GradedModule:
    """Graded dimensions of the homology of a complex over the Novikov
    field: dim H_k = dim C_k - rank d_k - rank d_{k+1}."""
    if C.ring != NOVIKOV:
        raise ValueError("homology_field needs Novikov-field coefficients")
    _require_valid(C)
    ranks = {k: rank_field(C.matrix(k)) for k in C.degrees()}
    entries = []
    for k in C.degrees():
        dim = len(C.gens_at(k)) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        entries.append((k, dim))
    return graded(NOVIKOV, entries)


# --- homology over the integers ---------------------------------------

def _integer_presentation(A, B, n):
    """Presentation of ker(A)/im(B) inside Z^n, where A has n columns
    and B has n rows; returns (ngens, relation rows)."""
    if n == 0:
        return 0, []
    if not A or not A[0]:
        ker_idx = list(range(n))
        reduced = [list(row) for row in B] if B else [[] for _ in range(n)]
    else:
        snf = smith_normal_form(A)
        diag = snf.diagonal()
        nonzero = sum(1 for d in diag if d)
        ker_idx = list(range(nonzero, n))
        # y-coordinates (x = V y) of the image of B
        from .snf import matmul as imatmul
        Y = imatmul([list(r) for r in snf.V_inv],
                    [list(row) for row in B]) if B and B[0] else \
            [[] for _ in range(n)]
        for i in range(nonzero):
            assert all(x == 0 for x in Y[i]), "image not inside kernel"
        reduced = Y
    p = len(reduced[0]) if reduced and reduced[0] else 0
    rows = []
    for c in range(p):
        row = tuple(reduced[z][c] for z in ker_idx)
        if any(row):
            rows.append(row)
    return len(ker_idx), rows


def homology_integer(C: FreeChainComplex) -> GradedModule:
    """Homology of a complex over the integers, classified into a free
    part and cyclic torsion summands via Smith normal form."""
    if C.ring.kind != "integer":
        raise ValueError("homology_integer needs integer coefficients")
    _require_valid(C)
    entries = []
    for k in C.degrees():
        A = C.matrix(k)
        B = C.matrix(k + 1)
        n = len(C.gens_at(k))
        ngens, rows = _integer_presentation(A, B, n)
        if rows:
            snf = smith_normal_form(rows)
            cert = SmithCertificate(snf.U, snf.D, snf.V)
            classification = read_summands(C.ring, ngens, snf.D)
        else:
            cert = SmithCertificate((), (), ())
            classification = read_summands(C.ring, ngens,
                                           [[0] * ngens] if ngens else [])
        mod = FinitelyPresentedModule(C.ring, ngens,
                                      tuple(tuple(r) for r in rows),
                                      classification, cert)
        entries.append((k, mod))
    return graded(C.ring, entries)


# --- homology over a Laurent ring --------------------------------------

def _unit_eliminate(ring, A, B):
    """Clear unit pivots of A by elementary operations, mirroring the
    column operations on A as row operations on B (they share the basis
    of the middle term).  Returns (A, B, killed column set, active rows,
    active cols)."""
    A = [list(r) for r in A]
    B = [list(r) for r in B]
    m = len(A)
    n = len(A[0]) if A else (len(B))
    act_r = set(range(m))
    act_c = set(range(n))
    killed = set()
    while True:
        pivot = None
        for i in sorted(act_r):
            for j in sorted(act_c):
                if not A[i][j].is_zero() and A[i][j].is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i0, j0 = pivot
        u_inv = A[i0][j0].unit_inverse()
        for r in sorted(act_r - {i0}):
            coef = A[r][j0]
            if coef.is_zero():
                continue
            factor = coef * u_inv
            for c in sorted(act_c):
                A[r][c] = A[r][c] - factor * A[i0][c]
        for c in sorted(act_c - {j0}):
            coef = A[i0][c]
            if coef.is_zero():
                continue
            factor = u_inv * coef
            for r in sorted(act_r):
                A[r][c] = A[r][c] - A[r][j0] * factor
            if B:
                B[j0] = [B[j0][q] + factor * B[c][q]
                         for q in range(len(B[j0]))]
        act_r.discard(i0)
        act_c.discard(j0)
        killed.add(j0)
    return A, B, killed, act_r, act_c


def _laurent_presentation(ring, A, B, n):
    """Presentation of ker(A)/im(B) for matrices over the Laurent ring.

    After unit-pivot elimination the residual of A must be generalized
    diagonal: then its nonzero 1x1 blocks are injective (the ring is a
    domain), the kernel is spanned by the remaining basis vectors, and
    the corresponding rows of B present the quotient.  Anything else
    would need syzygy machinery and raises UnsupportedComplex.
    """
    if n == 0:
        return 0, []
    if not A or not A[0]:
        A = []
    if not B or not B[0]:
        B = [[] for _ in range(n)]
    A2, B2, killed, act_r, act_c = _unit_eliminate(ring, A, B)
    pinned = {}
    for j in sorted(act_c):
        nz = [i for i in sorted(act_r) if A2 and not A2[i][j].is_zero()]
        if len(nz) > 1:
            raise UnsupportedComplex(
                "residual differential column is not 1x1 after unit "
                "elimination")
        if nz:
            pinned[j] = nz[0]
    if len(set(pinned.values())) != len(pinned):
        raise UnsupportedComplex(
            "residual differential row is not 1x1 after unit elimination")
    blocked = killed | set(pinned)
    for j in sorted(blocked):
        if B2 and any(not x.is_zero() for x in B2[j]):
            raise UnsupportedComplex(
                "image meets a direction outside the visible kernel")
    ker_idx = [j for j in range(n) if j not in blocked]
    p = len(B2[0]) if B2 and B2[0] else 0
    rows = []
    for c in range(p):
        row = tuple(B2[z][c] for z in ker_idx)
        if any(not x.is_zero() for x in row):
            rows.append(row)
    return len(ker_idx), rows


def _classify_presentation(ring, ngens, rows):
    """Unit-pivot elimination on a presentation with a recorded op log;
    returns (classification or None, certificate)."""
    M = [list(r) for r in rows]
    ops = []
    act_r = set(range(len(M)))
    act_c = set(range(ngens))
    while True:
        pivot = None
        for i in sorted(act_r):
            for j in sorted(act_c):
                if not M[i][j].is_zero() and M[i][j].is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i0, j0 = pivot
        u_inv = M[i0][j0].unit_inverse()
        for r in sorted(act_r - {i0}):
            coef = M[r][j0]
            if coef.is_zero():
                continue
            factor = -(coef * u_inv)
            ops.append(("row+", r, i0, factor))
            M[r] = [M[r][c] + factor * M[i0][c] for c in range(ngens)]
        for c in sorted(act_c - {j0}):
            coef = M[i0][c]
            if coef.is_zero():
                continue
            factor = -(u_inv * coef)
            ops.append(("col+", c, j0, factor))
            for r in range(len(M)):
                M[r][c] = M[r][c] + M[r][j0] * factor
        act_r.discard(i0)
        act_c.discard(j0)
    normal_form = tuple(tuple(r) for r in M)
    cert = ElementaryOpsCertificate(tuple(ops), normal_form)
    if ring.rank != 1:
        return None, cert
    classification = read_summands(ring, ngens, normal_form)
    return classification, cert


def homology_laurent(C: FreeChainComplex) -> GradedModule:
    """Homology of a complex over a Laurent ring, as finitely presented
    modules; over the rank-1 ring a classification into free, trivial-Z
    and cyclic summands is attempted (its absence is not an error)."""
    if C.ring.kind != "laurent":
        raise ValueError("homology_laurent needs Laurent coefficients")
    _require_valid(C)
    entries = []
    for k in C.degrees():
        A = C.matrix(k)
        B = C.matrix(k + 1)
        n = len(C.gens_at(k))
        ngens, rows = _laurent_presentation(C.ring, A, B, n)
        classification, cert = _classify_presentation(C.ring, ngens, rows)
        mod = FinitelyPresentedModule(C.ring, ngens,
                                      tuple(tuple(r) for r in rows),
                                      classification, cert)
        entries.append((k, mod))
    return graded(C.ring, entries)


# --- tensor products ---------------------------------------------------

def _sign_of(degree: Fraction) -> int:
    # floor(k - 1) == floor(k) - 1 for every rational k, so this sign
    # alternates along each differential.
    q = degree.numerator // degree.denominator
    return -1 if q % 2 else 1


def tensor_over_field(C: FreeChainComplex,
                      D: FreeChainComplex) -> FreeChainComplex:
    """Tensor product over the Novikov field; degrees add."""
    if C.ring != NOVIKOV or D.ring != NOVIKOV:
        raise ValueError("tensor_over_field needs Novikov-field complexes")
    gens = []
    for cn, cd in C.generators:
        for dn, dd in D.generators:
            gens.append((f"({cn})x({dn})", cd + dd))
    c_diff = {}
    for s, t, v in C.entries:
        c_diff.setdefault(s, []).append((t, v))
    d_diff = {}
    for s, t, v in D.entries:
        d_diff.setdefault(s, []).append((t, v))
    ents = []
    for cn, cd in C.generators:
        for dn, _ in D.generators:
            src = f"({cn})x({dn})"
            for t, v in c_diff.get(cn, ()):
                ents.append((src, f"({t})x({dn})", v))
            sign = _sign_of(cd)
            for t, v in d_diff.get(dn, ()):
                ents.append((src, f"({cn})x({t})", v * sign))
    return chain_complex(NOVIKOV, gens, ents)


# --- chain maps, cones, exact triangles --------------------------------

@dataclass(frozen=True)
class ChainMap:
    """Degree-preserving map of complexes over a shared ring; build with
    :func:`chain_map` (which validates) and check :meth:`is_chain_map`."""

    src: FreeChainComplex
    dst: FreeChainComplex
    entries: tuple[tuple[str, str, object], ...]

    def matrix_at(self, degree):
        degree = Fraction(degree)
        srcs = self.src.gens_at(degree)
        dsts = self.dst.gens_at(degree)
        lookup = {(s, t): v for s, t, v in self.entries}
        z = zero_of(self.dst.ring)
        return [[lookup.get((s, t), z) for s in srcs] for t in dsts]

    def degrees(self):
        return tuple(sorted(set(self.src.degrees()) | set(self.dst.degrees())))

    def is_chain_map(self) -> Diagnostics:
        problems = []
        ring = self.src.ring
        for k in self.degrees():
            width = len(self.src.gens_at(k))
            lhs = mat_mul(ring, self.matrix_at(k - 1), self.src.matrix(k),
                          cols=width)
            rhs = mat_mul(ring, self.dst.matrix(k), self.matrix_at(k),
                          cols=width)
            for i, row in enumerate(lhs):
                for j, x in enumerate(row):
                    if not is_zero(ring, x - rhs[i][j]):
                        problems.append(
                            f"degree {k}: f d != d f at entry ({i},{j})")
        return Diagnostics(not problems, tuple(problems))


def chain_map(src: FreeChainComplex, dst: FreeChainComplex,
              entries) -> ChainMap:
    if src.ring != dst.ring:
        raise ValueError("chain map endpoints must share a ring")
    ents = []
    seen = set()
    for s, t, v in entries:
        s, t = str(s), str(t)
        if src.degree_of(s) != dst.degree_of(t):
            raise ValueError(f"map entry {s!r} -> {t!r} changes degree")
        if (s, t) in seen:
            raise ValueError(f"duplicate map entry {s!r} -> {t!r}")
        seen.add((s, t))
        if not validate_element(src.ring, v):
            raise ValueError(f"entry {v!r} not an element of {src.ring}")
        if is_zero(src.ring, v) and (src.ring.kind != "novikov"
                                     or v.is_zero()):
            continue
        ents.append((s, t, v))
    return ChainMap(src, dst, tuple(sorted(ents, key=lambda e: e[:2])))


def identity_chain_map(C: FreeChainComplex) -> ChainMap:
    from .rings import one_of
    u = one_of(C.ring)
    return chain_map(C, C, [(n, n, u) for n, _ in C.generators])


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f."""
    if f.dst is not g.src and f.dst != g.src:
        raise ValueError("chain maps do not compose")
    ring = f.src.ring
    ents = []
    for k in f.degrees():
        srcs = f.src.gens_at(k)
        dsts = g.dst.gens_at(k)
        M = mat_mul(ring, g.matrix_at(k), f.matrix_at(k), cols=len(srcs))
        for i, t in enumerate(dsts):
            for j, s in enumerate(srcs):
                v = M[i][j]
                if not is_zero(ring, v) or (ring.kind == "novikov"
                                            and not v.is_zero()):
                    ents.append((s, t, v))
    return chain_map(f.src, g.dst, ents)


def shift_complex(C: FreeChainComplex) -> FreeChainComplex:
    """Degree shift by one, with the differential negated."""
    gens = [(n, d + 1) for n, d in C.generators]
    ents = [(s, t, -v) for s, t, v in C.entries]
    return chain_complex(C.ring, gens, ents)


def mapping_cone(f: ChainMap) -> FreeChainComplex:
    """Cone of a chain map, with the source part shifted up by one."""
    diag = f.is_chain_map()
    if not diag:
        raise NotChainMap("; ".join(diag.problems))
    ring = f.src.ring
    gens = [(f"s:{n}", d + 1) for n, d in f.src.generators]
    gens += [(f"t:{n}", d) for n, d in f.dst.generators]
    ents = []
    for s, t, v in f.src.entries:
        ents.append((f"s:{s}", f"s:{t}", -v))
    for s, t, v in f.dst.entries:
        ents.append((f"t:{s}", f"t:{t}", v))
    for s, t, v in f.entries:
        ents.append((f"s:{s}", f"t:{t}", -v))
    return chain_complex(ring, gens, ents)


def induced_rank(f: ChainMap, degree) -> int:
    """Rank of the map induced on homology at a degree, over the Novikov
    field, from ranks alone:

        rank H(f)_k = rank [[F, e],[d, 0]] - rank d_k - rank e_{k+1},

    where F is the chain map at degree k, d the source differential out
    of k and e the target differential into k.
    """
    k = Fraction(degree)
    F = f.matrix_at(k)
    E = f.dst.matrix(k + 1)
    Dk = f.src.matrix(k)
    n_dst = len(f.dst.gens_at(k))
    n_src = len(f.src.gens_at(k))
    n_below = len(f.src.gens_at(k - 1))
    n_up = len(f.dst.gens_at(k + 1))
    z = zero_of(NOVIKOV)
    top = [list(F[i]) + list(E[i]) for i in range(n_dst)]
    bottom = [list(Dk[i]) + [z] * n_up for i in range(n_below)]
    block = top + bottom
    if not block or not (n_src + n_up):
        return 0
    return rank_field(block) - rank_field(Dk) - rank_field(E)


def _field_dims(C: FreeChainComplex) -> dict:
    return {k: v for k, v in homology_field(C).entries}


@dataclass(frozen=True)
class NodeCheck:
    degree: Fraction
    node: str
    composite_rank: int
    rank_in: int
    rank_out: int
    dim: int

    @property
    def exact(self) -> bool:
        return self.composite_rank == 0 and \
            self.rank_in + self.rank_out == self.dim


@dataclass(frozen=True)
class ExactnessReport:
    """Exactness audit of the triangle H(C) -> H(D) -> H(cone) -> H(C)[1]."""

    dim_source: tuple[tuple[Fraction, int], ...]
    dim_target: tuple[tuple[Fraction, int], ...]
    dim_cone: tuple[tuple[Fraction, int], ...]
    map_ranks: tuple[tuple[Fraction, tuple[int, int, int]], ...]
    nodes: tuple[NodeCheck, ...]

    @property
    def ok(self) -> bool:
        return all(n.exact for n in self.nodes)

    def __bool__(self):
        return self.ok

    def source_to_target_is_iso(self) -> bool:
        ds = dict(self.dim_source)
        dt = dict(self.dim_target)
        ranks = dict(self.map_ranks)
        for k in set(ds) | set(dt):
            f_rank = ranks.get(k, (0, 0, 0))[0]
            if ds.get(k, 0) != dt.get(k, 0) or f_rank != ds.get(k, 0):
                return False
        return True


def les_of_cone(f: ChainMap) -> ExactnessReport:
    """Compute the homology of source, target and cone, the three induced
    maps of the triangle, and certify exactness at every node (composite
    zero plus dimension count) over the Novikov field."""
    if f.src.ring != NOVIKOV:
        raise ValueError("les_of_cone needs Novikov-field complexes")
    diag = f.is_chain_map()
    if not diag:
        raise NotChainMap("; ".join(diag.problems))
    cone = mapping_cone(f)
    c_shift = shift_complex(f.src)
    d_shift = shift_complex(f.dst)
    inc = chain_map(f.dst, cone,
                    [(n, f"t:{n}", _one()) for n, _ in f.dst.generators])
    proj = chain_map(cone, c_shift,
                     [(f"s:{n}", n, _one()) for n, _ in f.src.generators])
    f_shift = chain_map(c_shift, d_shift, list(f.entries))
    comp_if = compose_chain_maps(inc, f)
    comp_pi = compose_chain_maps(proj, inc)
    comp_fp = compose_chain_maps(f_shift, proj)

    dims_c = _field_dims(f.src)
    dims_d = _field_dims(f.dst)
    dims_cone = _field_dims(cone)
    dims_cs = _field_dims(c_shift)

    degrees = sorted(set(dims_c) | set(dims_d) | set(dims_cone)
                     | set(dims_cs) | {k + 1 for k in dims_c})
    nodes = []
    map_ranks = []
    for k in degrees:
        r_f = induced_rank(f, k)
        r_i = induced_rank(inc, k)
        r_p = induced_rank(proj, k)
        r_fs = induced_rank(f_shift, k)
        map_ranks.append((k, (r_f, r_i, r_p)))
        nodes.append(NodeCheck(k, "target", induced_rank(comp_if, k),
                               r_f, r_i, dims_d.get(k, 0)))
        nodes.append(NodeCheck(k, "cone", induced_rank(comp_pi, k),
                               r_i, r_p, dims_cone.get(k, 0)))
        nodes.append(NodeCheck(k, "source-shift", induced_rank(comp_fp, k),
                               r_p, r_fs, dims_cs.get(k, 0)))
    return ExactnessReport(
        tuple(sorted(dims_c.items())), tuple(sorted(dims_d.items())),
        tuple(sorted(dims_cone.items())), tuple(map_ranks), tuple(nodes))


def _one():
    from .novikov import one
    return one()
