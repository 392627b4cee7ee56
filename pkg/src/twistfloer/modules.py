"""Finitely presented modules, summand classifications, graded modules.

A module is presented as the cokernel of a relations-by-generators
matrix over a tagged ring.  Homology computations attach, when they
can, a classification into standard summands:

* ``FreeSummand(n)`` -- a free module of rank n;
* ``TrivialZSummand`` -- the integers with every group-ring variable
  acting as the identity, i.e. the cokernel of (1 - t);
* ``CyclicSummand(p)`` -- the quotient by a single ring element p.

A classification is never taken on faith: it carries a certificate,
either a log of elementary row/column operations bringing the
presentation to a generalized-diagonal normal form, or a Smith normal
form over the integers.  :func:`check_classification` replays it.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError
from .groupring import GroupRingElement
from .rings import INTEGER, RingTag, is_zero, validate_element, zero_of
from .snf import matmul


@dataclass(frozen=True)
class FreeSummand:
    n: int


@dataclass(frozen=True)
class TrivialZSummand:
    pass


@dataclass(frozen=True)
class CyclicSummand:
    """Quotient of the ring by the single element ``p``.

    Over the rank-1 Laurent ring, for p a unit multiple of (1 - t^k)
    the underlying abelian group is free of rank k; that companion data
    is recorded when recognized.
    """

    p: object
    abelian_rank: int | None = None


Summand = FreeSummand | TrivialZSummand | CyclicSummand


# --- classification certificates -------------------------------------

# An elementary-operations certificate stores the op log that was applied
# to the presentation, and the resulting normal form.  Ops:
#   ("row+", dst, src, coeff)   row_dst += coeff * row_src
#   ("col+", dst, src, coeff)   col_dst += coeff * col_src
#   ("row*", i, unit)           row_i *= unit
#   ("col*", j, unit)           col_j *= unit

@dataclass(frozen=True)
class ElementaryOpsCertificate:
    ops: tuple[tuple, ...]
    normal_form: tuple[tuple[object, ...], ...]


@dataclass(frozen=True)
class SmithCertificate:
    U: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FinitelyPresentedModule:
    ring: RingTag
    ngens: int
    relations: tuple[tuple[object, ...], ...]
    classification: tuple[Summand, ...] | None = None
    certificate: object | None = None

    def __post_init__(self):
        for row in self.relations:
            if len(row) != self.ngens:
                raise ValueError("relation length differs from ngens")
            for x in row:
                if not validate_element(self.ring, x):
                    raise ValueError(f"entry {x!r} not in ring {self.ring}")

    def is_classified(self) -> bool:
        return self.classification is not None

    def is_zero_module(self) -> bool:
        return self.classification == ()

    def describe(self) -> str:
        if self.classification is None:
            return (f"<unclassified: {len(self.relations)}x{self.ngens}"
                    " presentation>")
        if not self.classification:
            return "0"
        return " + ".join(_summand_str(self.ring, s)
                          for s in self.classification)


def _summand_str(ring: RingTag, s: Summand) -> str:
    if isinstance(s, FreeSummand):
        base = str(ring)
        return base if s.n == 1 else f"{base}^{s.n}"
    if isinstance(s, TrivialZSummand):
        return "Z (trivial action)"
    if ring.kind == "integer":
        return f"Z/{s.p}"
    return f"{ring}/({s.p})"


def free_module(ring: RingTag, n: int) -> FinitelyPresentedModule:
    return FinitelyPresentedModule(
        ring, n, (), (FreeSummand(n),) if n else (),
        ElementaryOpsCertificate((), ()))


def trivial_z_module(rank: int = 1) -> FinitelyPresentedModule:
    """Z with trivial action, presented over the rank-1 Laurent ring as
    the cokernel of (1 - t)."""
    from .groupring import t_poly
    from .rings import laurent_ring
    if rank != 1:
        raise ValueError("trivial-Z presentation implemented for rank 1")
    rel = t_poly({0: 1, 1: -1})
    return FinitelyPresentedModule(
        laurent_ring(1), 1, ((rel,),), (TrivialZSummand(),),
        ElementaryOpsCertificate((), ((rel,),)))


def zero_module(ring: RingTag) -> FinitelyPresentedModule:
    return FinitelyPresentedModule(ring, 0, (), (),
                                   ElementaryOpsCertificate((), ()))


# --- graded modules ---------------------------------------------------

@dataclass(frozen=True)
class TowerFlag:
    """Marks a graded module whose listed entries truncate an infinite
    arithmetic tower of summands."""

    start: Fraction
    step: Fraction
    length: int
    note: str = "truncated infinite tower"


@dataclass(frozen=True)
class GradedModule:
    """Map from rational degrees to modules.

    Over the Novikov field the values are plain dimensions (ints);
    over other rings they are FinitelyPresentedModule instances.
    """

    ring: RingTag
    entries: tuple[tuple[Fraction, object], ...]
    tower: TowerFlag | None = None
    provenance: str | None = None

    def __post_init__(self):
        degs = [d for d, _ in self.entries]
        if degs != sorted(degs) or len(set(degs)) != len(degs):
            raise ValueError("degrees must be strictly ascending")

    def degrees(self) -> tuple[Fraction, ...]:
        return tuple(d for d, _ in self.entries)

    def at(self, degree):
        degree = Fraction(degree)
        for d, m in self.entries:
            if d == degree:
                return m
        return None

    def dimension(self, degree) -> int:
        """Dimension at a degree, for Novikov-field graded modules."""
        if self.ring.kind != "novikov":
            raise ValueError("dimensions only tracked over the Novikov field")
        m = self.at(degree)
        return 0 if m is None else m

    def nonzero_entries(self):
        out = []
        for d, m in self.entries:
            if self.ring.kind == "novikov":
                if m:
                    out.append((d, m))
            elif not (isinstance(m, FinitelyPresentedModule)
                      and m.is_zero_module()):
                out.append((d, m))
        return tuple(out)


def graded(ring: RingTag, entries, tower=None, provenance=None) -> GradedModule:
    items = entries.items() if hasattr(entries, "items") else entries
    norm = tuple(sorted((Fraction(d), m) for d, m in items))
    return GradedModule(ring, norm, tower, provenance)


# --- certificate checking --------------------------------------------

def _apply_ops(ring: RingTag, matrix, ops):
    M = [list(row) for row in matrix]
    for op in ops:
        kind = op[0]
        if kind == "row+":
            _, dst, src, coeff = op
            M[dst] = [M[dst][j] + coeff * M[src][j] for j in range(len(M[dst]))]
        elif kind == "col+":
            _, dst, src, coeff = op
            for row in M:
                row[dst] = row[dst] + coeff * row[src]
        elif kind == "row*":
            _, i, unit = op
            M[i] = [unit * x for x in M[i]]
        elif kind == "col*":
            _, j, unit = op
            for row in M:
                row[j] = unit * row[j]
        else:
            raise FormatError(f"unknown elementary op {kind!r}")
    return M


def generalized_diagonal_positions(ring: RingTag, M):
    """Positions of nonzero entries if each row and each column holds at
    most one; None otherwise."""
    seen_rows, seen_cols, positions = set(), set(), []
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if is_zero(ring, x):
                continue
            if i in seen_rows or j in seen_cols:
                return None
            seen_rows.add(i)
            seen_cols.add(j)
            positions.append((i, j))
    return positions


def read_summands(ring: RingTag, ngens: int, M) -> tuple[Summand, ...] | None:
    """Summand reading of a generalized-diagonal presentation; None when
    the matrix is not generalized diagonal."""
    positions = generalized_diagonal_positions(ring, M)
    if positions is None:
        return None
    pivot_col = {j: M[i][j] for i, j in positions}
    free = 0
    torsion = []
    for j in range(ngens):
        if j not in pivot_col:
            free += 1
            continue
        p = pivot_col[j]
        if ring.kind == "integer":
            d = abs(p)
            if d != 1:
                torsion.append(CyclicSummand(d))
            continue
        if p.is_unit():
            continue
        torsion.append(classify_cyclic(p))
    out = []
    if free:
        out.append(FreeSummand(free))
    out.extend(torsion)
    return tuple(out)


def classify_cyclic(p: GroupRingElement) -> Summand:
    """Classify the cokernel of a single nonzero non-unit Laurent
    element, normalizing away the unit factor."""
    norm = _strip_unit(p)
    k = _cyclotomic_span(norm)
    if k == 1:
        return TrivialZSummand()
    return CyclicSummand(norm, abelian_rank=k)


def _strip_unit(p: GroupRingElement) -> GroupRingElement:
    # divide by +-(lowest monomial sign) so the lex-first term has
    # exponent zero and positive coefficient where possible
    from .groupring import monomial
    exps, c = p.terms[0]
    sign = 1 if c > 0 else -1
    return p * monomial(p.rank, tuple(-e for e in exps), sign)


def _cyclotomic_span(p: GroupRingElement) -> int | None:
    """For normalized rank-1 p equal to 1 - t^k, return k; else None."""
    if p.rank != 1 or len(p.terms) != 2:
        return None
    (e1, c1), (e2, c2) = p.terms
    if e1 == (0,) and c1 == 1 and c2 == -1:
        return e2[0]
    return None


def companion_abelian_group(p: GroupRingElement):
    """Underlying abelian group of Z[t,t^-1]/(p) for p a unit multiple
    of (1 - t^k), certified by a Smith normal form.

    Reducing exponents modulo k identifies the quotient with the span of
    t^0..t^{k-1}; each relation t^j * p reduces to the zero vector, so
    the relation matrix is zero and the Smith normal form certifies a
    free abelian group of rank k.  Returns (rank, torsion).
    """
    from .snf import smith_normal_form
    norm = _strip_unit(p)
    k = _cyclotomic_span(norm)
    if k is None:
        raise ValueError(f"{p} is not a unit multiple of 1 - t^k")
    rel_rows = []
    for j in range(k):
        vec = [0] * k
        for (e,), c in norm.terms:
            vec[(e + j) % k] += c
        rel_rows.append(vec)
    snf = smith_normal_form(rel_rows)
    factors = snf.invariant_factors()
    rank = k - len(factors)
    torsion = tuple(d for d in factors if d != 1)
    return rank, torsion


def check_classification(module: FinitelyPresentedModule) -> bool:
    """Replay the recorded certificate and confirm it supports the
    stored classification."""
    if module.classification is None or module.certificate is None:
        return False
    cert = module.certificate
    if isinstance(cert, ElementaryOpsCertificate):
        got = _apply_ops(module.ring, module.relations, cert.ops)
        if tuple(tuple(r) for r in got) != cert.normal_form:
            return False
        summands = read_summands(module.ring, module.ngens, cert.normal_form)
        return summands == module.classification
    if isinstance(cert, SmithCertificate):
        if module.ring != INTEGER:
            return False
        got = matmul(matmul([list(r) for r in cert.U],
                            [list(r) for r in module.relations]),
                     [list(r) for r in cert.V])
        if tuple(tuple(r) for r in got) != cert.D:
            return False
        summands = read_summands(INTEGER, module.ngens, cert.D)
        return summands == module.classification
    return False
