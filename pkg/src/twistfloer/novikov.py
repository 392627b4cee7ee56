"""Exact arithmetic in the universal Novikov field.

An element is a finite formal sum ``sum_i c_i * t**r_i`` with strictly
ascending rational exponents ``r_i`` and nonzero rational coefficients
``c_i``, together with a truncation cutoff ``trunc``: coefficients of
exponents ``>= trunc`` are unknown (a big-O marker), and every stored
exponent lies below ``trunc``.  ``trunc == INF`` means the element is
exact.  The finiteness condition defining the Novikov field (finitely
many nonzero coefficients below any bound) holds by construction.

Truncations propagate through arithmetic: a sum is known below the
smaller of the two cutoffs, and a product ``a*b`` is known below
``min(trunc(a) + val(b), trunc(b) + val(a))`` where ``val`` is the
smallest exponent that could carry a nonzero coefficient.  Products
with the exact zero series are exact zero.

Every exact nonzero element is invertible: factor out the leading
monomial and expand a geometric series (:func:`invert`).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotExact, ZeroUpToPrecision

INF = math.inf

#: A rational cutoff or +infinity.
Cutoff = Fraction | float


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _cutoff(x) -> Cutoff:
    if x == INF:
        return INF
    return _rat(x)


def _cut_add(a: Cutoff, b: Cutoff) -> Cutoff:
    if a == INF or b == INF:
        return INF
    return a + b


@dataclass(frozen=True)
class NovikovSeries:
    """A Novikov-field element in canonical form.

    Do not call the constructor with raw data; use :func:`series`, which
    merges duplicate exponents, drops zero coefficients and terms at or
    above the cutoff, and sorts.  Equality is structural (same stored
    terms, same cutoff); for truncated operands the meaningful predicate
    is :meth:`agrees_with`.
    """

    terms: tuple[tuple[Fraction, Fraction], ...]
    trunc: Cutoff = INF

    @property
    def is_exact(self) -> bool:
        return self.trunc == INF

    def is_zero(self) -> bool:
        """True only for the exact zero series."""
        return not self.terms and self.is_exact

    def valuation(self) -> Cutoff:
        """Smallest stored exponent; +inf for the exact zero series.

        Raises ZeroUpToPrecision when no terms are stored but the cutoff
        is finite, since the true leading exponent is then unknown.
        """
        if self.terms:
            return self.terms[0][0]
        if self.is_exact:
            return INF
        raise ZeroUpToPrecision(
            f"series is zero below its cutoff {self.trunc}; valuation unknown")

    def _val_floor(self) -> Cutoff:
        # Lower bound for the true valuation; safe for cutoff bookkeeping.
        if self.terms:
            return self.terms[0][0]
        return self.trunc

    def truncated(self, cutoff) -> "NovikovSeries":
        return series(self.terms, min(self.trunc, _cutoff(cutoff)))

    def agrees_with(self, other: "NovikovSeries") -> bool:
        """True when the two elements have the same coefficients on all
        exponents below the smaller cutoff."""
        m = min(self.trunc, other.trunc)
        mine = [(e, c) for e, c in self.terms if e < m]
        theirs = [(e, c) for e, c in other.terms if e < m]
        return mine == theirs

    def __add__(self, other):
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return series(acc.items(), min(self.trunc, other.trunc))

    def __neg__(self):
        return NovikovSeries(tuple((e, -c) for e, c in self.terms), self.trunc)

    def __sub__(self, other):
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return series(((e, c * other) for e, c in self.terms), self.trunc)
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        cut = min(_cut_add(self.trunc, other._val_floor()),
                  _cut_add(other.trunc, self._val_floor()))
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                if e >= cut:
                    continue
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return series(acc.items(), cut)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            body = "0"
        else:
            parts = []
            for e, c in self.terms:
                parts.append(_fmt_term(e, c, first=not parts))
            body = "".join(parts)
        if self.is_exact:
            return body
        return f"{body} + O(t^{self.trunc})"


def _fmt_term(e: Fraction, c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if e == 0:
        coeff = str(mag)
    elif mag == 1:
        coeff = ""
    else:
        coeff = f"{mag}*"
    power = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
    sep = "" if first else " "
    lead = sign if first else (sign + " ")
    return f"{sep}{lead}{coeff}{power}"


def series(terms, trunc=INF) -> NovikovSeries:
    """Canonicalizing constructor.

    ``terms`` is any iterable of (exponent, coefficient) pairs; they may
    be unsorted, contain duplicates or zero coefficients, and use ints
    or strings for the rationals.
    """
    cut = _cutoff(trunc)
    acc: dict[Fraction, Fraction] = {}
    for e, c in terms:
        e = _rat(e)
        c = _rat(c)
        if e >= cut:
            continue
        acc[e] = acc.get(e, Fraction(0)) + c
    items = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
    return NovikovSeries(items, cut)


def monomial(exponent, coefficient=1) -> NovikovSeries:
    return series([(exponent, coefficient)])


def zero() -> NovikovSeries:
    return NovikovSeries((), INF)


def one() -> NovikovSeries:
    return NovikovSeries(((Fraction(0), Fraction(1)),), INF)


def invert(a: NovikovSeries, precision) -> NovikovSeries:
    """Inverse of an exact nonzero element, correct below ``precision``.

    Writes ``a = c * t^v * (1 - u)`` with ``val(u) > 0`` and expands the
    geometric series in ``u`` until all further terms fall above the
    cutoff.  The result has ``trunc == precision``, and ``a * invert(a, p)``
    agrees with 1 everywhere its cutoff bookkeeping reaches.
    """
    if not a.is_exact:
        raise NotExact("can only invert exact series")
    if a.is_zero():
        raise ZeroDivisionError("cannot invert the zero series")
    p = _rat(precision)
    v, c = a.terms[0]
    lead_inv = monomial(-v, Fraction(1) / c)
    u = one() - a * lead_inv
    cutoff = p + v
    total = one().truncated(cutoff)
    power = total
    while power.terms:
        power = (power * u).truncated(cutoff)
        total = total + power
    result = total * lead_inv
    assert result.trunc == p
    return result
