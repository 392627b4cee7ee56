"""Coefficient-ring tags and generic entry arithmetic.

Chain complexes and presentations carry a tag naming their coefficient
ring; matrix entries are plain ints over the integers, GroupRingElement
over a Laurent ring, and NovikovSeries over the Novikov field.
"""

from dataclasses import dataclass

from . import groupring, novikov
from .groupring import GroupRingElement
from .novikov import NovikovSeries


@dataclass(frozen=True)
class RingTag:
    kind: str  # "integer" | "laurent" | "novikov"
    rank: int = 0

    def __post_init__(self):
        if self.kind not in ("integer", "laurent", "novikov"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "laurent" and self.rank < 1:
            raise ValueError("laurent ring needs rank >= 1")
        if self.kind != "laurent" and self.rank != 0:
            raise ValueError("rank only applies to laurent rings")

    def __str__(self):
        if self.kind == "integer":
            return "Z"
        if self.kind == "laurent":
            return "Z[t,t^-1]" if self.rank == 1 else \
                f"Z[t1^-1..t{self.rank}^-1]"
        return "Lambda"


INTEGER = RingTag("integer")
NOVIKOV = RingTag("novikov")


def laurent_ring(rank: int) -> RingTag:
    return RingTag("laurent", rank)


def zero_of(ring: RingTag):
    if ring.kind == "integer":
        return 0
    if ring.kind == "laurent":
        return groupring.zero(ring.rank)
    return novikov.zero()


def one_of(ring: RingTag):
    if ring.kind == "integer":
        return 1
    if ring.kind == "laurent":
        return groupring.one(ring.rank)
    return novikov.one()


def is_zero(ring: RingTag, x) -> bool:
    if ring.kind == "integer":
        return x == 0
    # For a truncated series "no stored terms" is the strongest statement
    # available; exact zero detection is the caller's concern.
    return not x.terms


def validate_element(ring: RingTag, x) -> bool:
    if ring.kind == "integer":
        return isinstance(x, int)
    if ring.kind == "laurent":
        return isinstance(x, GroupRingElement) and x.rank == ring.rank
    return isinstance(x, NovikovSeries)


def _is_exact_zero(ring: RingTag, x) -> bool:
    if ring.kind == "integer":
        return x == 0
    return x.is_zero()


def mat_mul(ring: RingTag, A, B, cols: int | None = None):
    """Product of matrices with entries in the tagged ring.

    Truncated Novikov entries propagate their cutoffs into the product;
    only exact zeros are skipped.  When B has no rows its column count
    is unrecoverable, so callers that may hit a degenerate inner
    dimension pass the intended output width as ``cols``.
    """
    if not A:
        return []
    p = len(B[0]) if B else (cols if cols is not None else 0)
    out = [[zero_of(ring) for _ in range(p)] for _ in range(len(A))]
    for i, row in enumerate(A):
        for k, a in enumerate(row):
            if _is_exact_zero(ring, a):
                continue
            for j in range(p):
                out[i][j] = out[i][j] + a * B[k][j]
    return out
