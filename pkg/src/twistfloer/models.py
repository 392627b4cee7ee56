"""Model chain complexes and graded modules for the surgery pipeline.

These are the explicit desk-scale inputs the certification chain
consumes:

* the hat complex of S^1 x S^2 with universal twisting -- two
  generators in degrees +-1/2 joined by (1 - t);
* its twisted form over the Novikov field, with differential
  t^c * (1 - t^d) for a fiber pairing d;
* connected sums, as tensor products over the field;
* the vanishing rule for manifolds containing a nonseparating sphere of
  nonzero pairing, certified by recomputing the acyclicity of the
  twisted S^1 x S^2 model plus the tensor argument;
* the universally twisted homology of 0-surgery on the right-handed
  trefoil, entered as a graded module (its tower of trivial-Z summands
  truncated at a chosen length).  This module is axiomatized from the
  absolutely graded computation of Ozsvath and Szabo, not derived from
  a Heegaard diagram; holomorphic curve counting is outside this
  package.
"""

from dataclasses import dataclass
from fractions import Fraction

from .complexes import (FreeChainComplex, chain_complex, homology_field,
                        tensor_over_field, verify_complex)
from .errors import RingMismatch
from .groupring import t_poly
from .modules import (GradedModule, TowerFlag, free_module, graded,
                      trivial_z_module)
from .novikov import NovikovSeries, invert, one, series
from .rings import NOVIKOV, laurent_ring

DEFAULT_PRECISION = Fraction(100)

TREFOIL_PROVENANCE = ("universally twisted Floer homology of 0-surgery on "
                      "the right-handed trefoil, after Ozsvath-Szabo's "
                      "absolutely graded computation")


@dataclass(frozen=True)
class ModelComplex:
    """A chain complex bundled with a provenance label and flavor tag."""

    complex: FreeChainComplex
    provenance: str
    flavor: str = "hat"

    def __post_init__(self):
        diag = verify_complex(self.complex)
        assert diag, "; ".join(diag.problems)


def s1xs2_universal() -> ModelComplex:
    """Hat complex of S^1 x S^2 over Z[t,t^-1]: generators x+ and x- in
    degrees 1/2 and -1/2, differential 1 - t."""
    C = chain_complex(
        laurent_ring(1),
        [("x+", Fraction(1, 2)), ("x-", Fraction(-1, 2))],
        [("x+", "x-", t_poly({0: 1, 1: -1}))])
    return ModelComplex(C, "S1xS2 hat complex, universal twisting")


def s1xs2_omega(d: int, c=0) -> ModelComplex:
    """Twisted hat complex of S^1 x S^2 over the Novikov field, with
    differential t^c (1 - t^d).  For d = 0 the differential vanishes;
    the +-1/2 gradings there follow the universal model (the split
    answer fixes no grading by itself), noted in the provenance."""
    c = Fraction(c)
    diff = series([(c, 1), (c + d, -1)])
    entries = [] if diff.is_zero() else [("x+", "x-", diff)]
    C = chain_complex(
        NOVIKOV,
        [("x+", Fraction(1, 2)), ("x-", Fraction(-1, 2))],
        entries)
    note = f"S1xS2 hat complex, twisted by fiber pairing d={d}, c={c}"
    if d == 0:
        note += " (gradings +-1/2 assigned by analogy with the universal "
        note += "model)"
    return ModelComplex(C, note)


def connected_sum_hat(A: ModelComplex, B: ModelComplex) -> ModelComplex:
    """Connected-sum model: tensor product over the Novikov field."""
    if A.complex.ring != NOVIKOV or B.complex.ring != NOVIKOV:
        raise RingMismatch("connected sums are formed over the Novikov field")
    C = tensor_over_field(A.complex, B.complex)
    return ModelComplex(
        C, f"connected sum of [{A.provenance}] and [{B.provenance}]")


@dataclass(frozen=True)
class VanishingCertificate:
    """Record of the nonseparating-sphere vanishing rule for a given
    sphere pairing."""

    pairing: int
    verdict: str  # "vanishes" | "inconclusive"
    precision: Fraction | None = None
    model_homology: GradedModule | None = None
    unit_witness: NovikovSeries | None = None
    note: str = ""


def sphere_vanishing(d: int, precision=DEFAULT_PRECISION) -> VanishingCertificate:
    """Vanishing certificate for a manifold containing an embedded
    nonseparating 2-sphere with twisting pairing ``d``.

    For d != 0 the twisted S^1 x S^2 model is recomputed and certified
    acyclic, splitting off as a tensor factor of any such manifold's
    complex and killing the total homology.  For d = 0 the rule's
    hypothesis fails and the verdict is inconclusive: nothing is claimed.
    """
    d = int(d)
    if d == 0:
        return VanishingCertificate(
            0, "inconclusive",
            note="sphere pairing is zero; the vanishing rule does not apply")
    precision = Fraction(precision)
    hom = homology_field(s1xs2_omega(d, 0).complex)
    assert all(dim == 0 for _, dim in hom.entries)
    diff = series([(0, 1), (d, -1)])
    witness = invert(diff, precision)
    assert (diff * witness).agrees_with(one())
    return VanishingCertificate(
        d, "vanishes", precision, hom, witness,
        note=("twisted S1xS2 factor is acyclic (1 - t^d is a unit), and "
              "a tensor factor with vanishing homology kills the "
              "homology of any connected sum over the field"))


def trefoil_zero_surgery_module(tower_length: int) -> GradedModule:
    """Universally twisted homology of 0-surgery on the right-handed
    trefoil, as a graded module over Z[t,t^-1]:

    * a free rank-1 module in degree -3/2;
    * trivial-Z summands in degrees -1/2, 3/2, 7/2, ..., truncated after
      ``tower_length`` entries and flagged as an infinite tower.
    """
    n = int(tower_length)
    if n < 1:
        raise ValueError("tower_length must be at least 1")
    entries = [(Fraction(-3, 2), free_module(laurent_ring(1), 1))]
    for i in range(n):
        entries.append((Fraction(-1, 2) + 2 * i, trivial_z_module()))
    flag = TowerFlag(start=Fraction(-1, 2), step=Fraction(2), length=n)
    return graded(laurent_ring(1), entries, tower=flag,
                  provenance=TREFOIL_PROVENANCE)
