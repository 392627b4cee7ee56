"""Change of coefficients and the universal-coefficients computation.

The universally twisted complex lives over a Laurent ring.  Base change
sends it to Novikov-field coefficients along a twisting pairing
(monomial t_i -> t^{w_i} entrywise) or to the integers along the
augmentation (all t_i -> 1).

Tor against the trivial module is computed from the explicit length-1
free resolution

    0 -> Z[t,t^-1] --(1-t)--> Z[t,t^-1] -> Z -> 0,

which after tensoring along the twisting becomes multiplication by
(1 - t^d) on the Novikov field: invertible exactly when d != 0.  Because
the resolution has length 1, the universal-coefficients spectral
sequence degenerates to short exact sequences

    0 -> H_k (x) M -> result_k -> Tor_1(H_{k-1}, M) -> 0,

so graded dimensions are plain sums; there is no room for higher
differentials and no general spectral-sequence engine is warranted.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import FreeChainComplex, chain_complex, verify_complex
from .errors import InvalidComplex, RankMismatch, Unclassified
from .groupring import OmegaHom, omega_hom, t_poly
from .modules import (CyclicSummand, FinitelyPresentedModule, FreeSummand,
                      GradedModule, TrivialZSummand, free_module, graded)
from .novikov import INF, NovikovSeries, invert, one
from .rings import INTEGER, NOVIKOV

DEFAULT_PRECISION = Fraction(100)


@dataclass(frozen=True)
class CoefficientSystem:
    variant: str  # "universal" | "trivial" | "omega"
    omega: OmegaHom | None = None

    def __post_init__(self):
        if self.variant not in ("universal", "trivial", "omega"):
            raise ValueError(f"unknown coefficient variant {self.variant!r}")
        if (self.variant == "omega") != (self.omega is not None):
            raise ValueError("omega variant needs a pairing; others do not")


def universal_system() -> CoefficientSystem:
    return CoefficientSystem("universal")


def trivial_system() -> CoefficientSystem:
    return CoefficientSystem("trivial")


def omega_system(omega) -> CoefficientSystem:
    if not isinstance(omega, OmegaHom):
        omega = omega_hom(omega)
    return CoefficientSystem("omega", omega)


def base_change(C: FreeChainComplex, system: CoefficientSystem,
                precision=DEFAULT_PRECISION) -> FreeChainComplex:
    """Entrywise image of the differential under the chosen coefficient
    system.  The images are exact, so ``precision`` does not enter here;
    the parameter is accepted for interface uniformity with the homology
    stages downstream."""
    del precision
    if C.ring.kind != "laurent":
        raise ValueError("base change starts from a Laurent-ring complex")
    diag = verify_complex(C)
    if not diag:
        raise InvalidComplex("; ".join(diag.problems))
    if system.variant == "universal":
        return C
    if system.variant == "trivial":
        ents = [(s, t, v.augment()) for s, t, v in C.entries]
        return chain_complex(INTEGER, C.generators, ents)
    if system.omega.rank != C.ring.rank:
        raise RankMismatch(
            f"complex has rank {C.ring.rank}, pairing has rank "
            f"{system.omega.rank}")
    ents = [(s, t, v.to_novikov(system.omega)) for s, t, v in C.entries]
    return chain_complex(NOVIKOV, C.generators, ents)


def tor_trivial(omega: OmegaHom, precision=DEFAULT_PRECISION):
    """(dim Tor_0, dim Tor_1) of the trivial module against the twisted
    Novikov coefficients, over the rank-1 Laurent ring.

    Tensoring the explicit resolution along the twisting leaves
    multiplication by the image of (1 - t); when that image is nonzero
    an inverse below ``precision`` is produced as a unit witness.
    """
    if omega.rank != 1:
        raise RankMismatch("tor_trivial is a rank-1 computation")
    image = t_poly({0: 1, 1: -1}).to_novikov(omega)
    if image.is_zero():
        return (1, 1)
    witness = invert(image, precision)
    assert (image * witness).agrees_with(one())
    return (0, 0)


def _summand_change_omega(summand, omega: OmegaHom, precision):
    if isinstance(summand, FreeSummand):
        return (summand.n, 0)
    if isinstance(summand, TrivialZSummand):
        return tor_trivial(omega, precision)
    if isinstance(summand, CyclicSummand):
        image = summand.p.to_novikov(omega)
        return (0, 0) if not image.is_zero() else (1, 1)
    raise TypeError(f"unknown summand {summand!r}")


def module_change(M: FinitelyPresentedModule, omega: OmegaHom,
                  precision=DEFAULT_PRECISION):
    """(dim of M (x) Lambda, dim of Tor_1(M, Lambda)) summand by summand;
    requires a classified module."""
    if M.classification is None:
        raise Unclassified("module carries no summand classification")
    tensor = tor1 = 0
    for s in M.classification:
        a, b = _summand_change_omega(s, omega, precision)
        tensor += a
        tor1 += b
    return (tensor, tor1)


def _summand_change_trivial(summand):
    """((rank, torsion), (rank, torsion)) of summand (x) Z and
    Tor_1(summand, Z) over the rank-1 Laurent ring, from the same
    resolution with the augmentation applied."""
    if isinstance(summand, FreeSummand):
        return ((summand.n, ()), (0, ()))
    if isinstance(summand, TrivialZSummand):
        # resolution gives multiplication by augment(1 - t) = 0 on Z
        return ((1, ()), (1, ()))
    if isinstance(summand, CyclicSummand):
        a = summand.p.augment()
        if a == 0:
            return ((1, ()), (1, ()))
        torsion = (abs(a),) if abs(a) != 1 else ()
        return ((0, torsion), (0, ()))
    raise TypeError(f"unknown summand {summand!r}")


def module_change_trivial(M: FinitelyPresentedModule):
    if M.classification is None:
        raise Unclassified("module carries no summand classification")
    tensor_rank, tensor_tors = 0, []
    tor_rank, tor_tors = 0, []
    for s in M.classification:
        (a, at), (b, bt) = _summand_change_trivial(s)
        tensor_rank += a
        tensor_tors.extend(at)
        tor_rank += b
        tor_tors.extend(bt)
    return ((tensor_rank, tuple(sorted(tensor_tors))),
            (tor_rank, tuple(sorted(tor_tors))))


def _abelian_module(rank: int, torsion) -> FinitelyPresentedModule:
    n = rank + len(torsion)
    rels = []
    for i, d in enumerate(torsion):
        row = [0] * n
        row[rank + i] = int(d)
        rels.append(tuple(row))
    classification = []
    if rank:
        classification.append(FreeSummand(rank))
    classification.extend(CyclicSummand(int(d)) for d in torsion)
    return FinitelyPresentedModule(INTEGER, n, tuple(rels),
                                   tuple(classification), None)


def ucss(H: GradedModule, system, precision=DEFAULT_PRECISION) -> GradedModule:
    """Graded result of the degenerate universal-coefficients spectral
    sequence: result_k = tensor(H_k) + Tor_1(H_{k-1}).

    ``system`` is a CoefficientSystem or a rank-1 OmegaHom.  For the
    twisted variant the answer is a graded Novikov dimension count; for
    the trivial variant it is a graded abelian group.  Every degree of
    ``H`` must be classified.
    """
    if isinstance(system, OmegaHom):
        system = omega_system(system)
    if H.ring.kind != "laurent" or H.ring.rank != 1:
        raise ValueError("universal coefficients implemented over the "
                         "rank-1 Laurent ring")
    if system.variant == "universal":
        return H
    degrees = sorted({d for d, _ in H.entries}
                     | {d + 1 for d, _ in H.entries})
    if system.variant == "omega":
        entries = []
        for k in degrees:
            here = H.at(k)
            below = H.at(k - 1)
            dim = 0
            if here is not None:
                dim += module_change(here, system.omega, precision)[0]
            if below is not None:
                dim += module_change(below, system.omega, precision)[1]
            if dim:
                entries.append((k, dim))
        tower = H.tower if _tower_survives(H, system, precision) else None
        return graded(NOVIKOV, entries, tower=tower)
    entries = []
    for k in degrees:
        here = H.at(k)
        below = H.at(k - 1)
        rank, tors = 0, []
        if here is not None:
            (a, at), _ = module_change_trivial(here)
            rank += a
            tors.extend(at)
        if below is not None:
            _, (b, bt) = module_change_trivial(below)
            rank += b
            tors.extend(bt)
        if rank or tors:
            entries.append((k, _abelian_module(rank, tuple(sorted(tors)))))
    return graded(INTEGER, entries, tower=H.tower)


def _tower_survives(H: GradedModule, system: CoefficientSystem,
                    precision) -> bool:
    """Whether the truncated-tower part of H still contributes after the
    twisted change of coefficients (it does not when every trivial-Z
    summand dies, making the answer truncation independent)."""
    if H.tower is None:
        return False
    return tor_trivial(system.omega, precision) != (0, 0) \
        if system.omega.rank == 1 else True
