"""Laurent-polynomial arithmetic and its evaluation into the Novikov field.

Elements of the integral group ring of a free abelian group of rank b
are finite integer combinations of exponent vectors -- equivalently
Laurent polynomials Z[t1^{+-1}, ..., tb^{+-1}].  For a closed oriented
3-manifold this is the coefficient ring of the universally twisted
chain complex, with b the first Betti number.

A rational pairing vector (one value per variable) induces the ring map
into the Novikov field sending the basis monomial with exponent vector
g to t**<w, g>; distinct monomials may collide and cancel there.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import RankMismatch
from .novikov import NovikovSeries, series


@dataclass(frozen=True)
class GroupRingElement:
    """Canonical form: lexicographically sorted exponent vectors of
    length ``rank``, nonzero integer coefficients.  Build with
    :func:`laurent` or :func:`monomial`."""

    rank: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        """Units of the Laurent ring are the signed monomials."""
        return len(self.terms) == 1 and self.terms[0][1] in (1, -1)

    def unit_inverse(self) -> "GroupRingElement":
        if not self.is_unit():
            raise ValueError(f"not a unit: {self}")
        (exps, c), = self.terms
        return monomial(self.rank, tuple(-e for e in exps), c)

    def augment(self) -> int:
        """Sum of coefficients: evaluation at all variables = 1."""
        return sum(c for _, c in self.terms)

    def to_novikov(self, omega: "OmegaHom") -> NovikovSeries:
        """Image under t_i -> t^{omega_i}; always exact."""
        if omega.rank != self.rank:
            raise RankMismatch(
                f"element has rank {self.rank}, pairing has rank {omega.rank}")
        return series(
            ((sum((w * e for w, e in zip(omega.values, exps)), Fraction(0)), c)
             for exps, c in self.terms))

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatch(f"ranks differ: {self.rank} != {other.rank}")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_rank(other)
        acc = dict(self.terms)
        for exps, c in other.terms:
            acc[exps] = acc.get(exps, 0) + c
        return laurent(self.rank, acc)

    def __neg__(self):
        return GroupRingElement(self.rank,
                                tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return laurent(self.rank, ((e, c * other) for e, c in self.terms))
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_rank(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return laurent(self.rank, acc)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms:
            mono = _fmt_monomial(self.rank, exps)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


def _fmt_monomial(rank: int, exps: tuple[int, ...]) -> str:
    names = ["t"] if rank == 1 else [f"t{i + 1}" for i in range(rank)]
    factors = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def laurent(rank: int, terms) -> GroupRingElement:
    """Canonicalizing constructor; ``terms`` is a mapping or an iterable
    of (exponent vector, integer coefficient) pairs."""
    if rank < 0:
        raise ValueError("rank must be a natural number")
    items = terms.items() if hasattr(terms, "items") else terms
    acc: dict[tuple[int, ...], int] = {}
    for exps, c in items:
        exps = tuple(int(e) for e in exps)
        if len(exps) != rank:
            raise RankMismatch(
                f"exponent vector {exps} has length {len(exps)}, expected {rank}")
        acc[exps] = acc.get(exps, 0) + int(c)
    return GroupRingElement(
        rank, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))


def monomial(rank: int, exps, coeff: int = 1) -> GroupRingElement:
    return laurent(rank, [(tuple(exps), coeff)])


def one(rank: int) -> GroupRingElement:
    return monomial(rank, (0,) * rank)


def zero(rank: int) -> GroupRingElement:
    return GroupRingElement(rank, ())


def t_poly(coeffs) -> GroupRingElement:
    """Rank-1 sugar: ``t_poly({0: 1, 1: -1})`` is ``1 - t``."""
    items = coeffs.items() if hasattr(coeffs, "items") else coeffs
    return laurent(1, (((int(e),), c) for e, c in items))


@dataclass(frozen=True)
class OmegaHom:
    """A rational pairing on the rank-b lattice of 1-cohomology classes;
    induces the twisting homomorphism into the Novikov field."""

    values: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.values)


def omega_hom(values) -> OmegaHom:
    return OmegaHom(tuple(Fraction(v) for v in values))
