"""Monodromy algebra and the torus-bundle certification pipeline.

A torus bundle over the circle is recorded by its monodromy in SL(2,Z).
The two right-handed Dehn twists along the standard nonseparating
curves act as

    T_A = [[1, 1], [0, 1]],    T_B = [[1, 0], [-1, 1]],

which generate SL(2,Z) as a monoid; (T_A T_B)^6 = I and the derived
relations T_A^-1 = T_B (T_A T_B)^5 and T_B^-1 = (T_A T_B)^5 T_A turn
any signed factorization into a positive word.

``build_certificate`` replays the proof chain for the twisted Floer
homology of a torus bundle whose twisting class pairs nontrivially with
the fiber: factor the monodromy difference to the reference bundle
(0-surgery on the right-handed trefoil, monodromy T_A T_B) into
right-handed twists; each twist step is a (-1)-framed 2-handle whose
companion 0-surgery contains a nonseparating sphere of pairing d != 0,
so its twisted homology vanishes and the surgery triangle makes the
step map an isomorphism; finally the reference bundle's homology is
computed by the universal-coefficients route.  ``verify_certificate``
re-derives every claim from scratch.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import ucss
from .errors import FiberPairingZero
from .groupring import omega_hom
from .models import (DEFAULT_PRECISION, VanishingCertificate,
                     sphere_vanishing, trefoil_zero_surgery_module)
from .modules import GradedModule

TRIANGLE_INFERENCE = ("surgery triangle with an acyclic third vertex: the "
                      "2-handle cobordism map is an isomorphism")


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(
                f"determinant of [[{self.a},{self.b}],[{self.c},{self.d}]] "
                "is not 1")

    def __mul__(self, other):
        if not isinstance(other, SL2Matrix):
            return NotImplemented
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d)

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = SL2Matrix(1, 0, 0, 1)
T_A = SL2Matrix(1, 1, 0, 1)
T_B = SL2Matrix(1, 0, -1, 1)

TWISTS = {"A": T_A, "B": T_B}

# positive rewrites of the inverse twists, from (T_A T_B)^6 = I
_NEG_A = "B" + "AB" * 5
_NEG_B = "AB" * 5 + "A"
_NEG_I = "AB" * 3

_WORD_TABLE_DEPTH = 12
_word_table: dict[tuple[int, int, int, int], str] | None = None


def reference_monodromy() -> SL2Matrix:
    """Monodromy of the terminal bundle of the chain: T_A * T_B, the
    order-6 matrix [[0,1],[-1,1]] of 0-surgery on the right-handed
    trefoil."""
    return T_A * T_B


def word_product(word: str) -> SL2Matrix:
    M = IDENTITY
    for ch in word:
        if ch not in TWISTS:
            raise ValueError(f"twist word may only contain A and B, got "
                             f"{ch!r}")
        M = M * TWISTS[ch]
    return M


def is_twist_word(word: str) -> bool:
    return all(ch in TWISTS for ch in word)


def _key(M: SL2Matrix):
    return (M.a, M.b, M.c, M.d)


def _table() -> dict:
    global _word_table
    if _word_table is None:
        table = {_key(IDENTITY): ""}
        frontier = [(IDENTITY, "")]
        for _ in range(_WORD_TABLE_DEPTH):
            nxt = []
            for M, w in frontier:
                for letter in "AB":
                    P = M * TWISTS[letter]
                    k = _key(P)
                    if k not in table:
                        table[k] = w + letter
                        nxt.append((P, w + letter))
            frontier = nxt
        _word_table = table
    return _word_table


def _signed_factorization(M: SL2Matrix):
    """Factor M as a product of T_A^n, T_B^n and -I by Euclidean
    reduction on the first column; returns a list of ("A"|"B", n) and
    ("-I", 1) factors whose ordered product is M."""
    left_ops = []  # operations applied on the left, in application order
    W = M
    while W.c != 0:
        if W.a == 0:
            left_ops.append(("A", 1))
            W = T_A * W
        # T_B^q * W subtracts q*a from c; pick q minimizing |c - q*a|
        q = _round_div(W.c, W.a)
        if q:
            left_ops.append(("B", q))
            W = _power("B", q) * W
        if W.c == 0:
            break
        # T_A^q * W adds q*c to a; pick q minimizing |a + q*c|
        q = -_round_div(W.a, W.c)
        if q:
            left_ops.append(("A", q))
            W = _power("A", q) * W
    # W = (last op) ... (first op) * M, so M = (first op)^-1 ... * W
    factors = [(letter, -n) for letter, n in left_ops]
    if W.a == 1:
        if W.b:
            factors.append(("A", W.b))
    else:
        factors.append(("-I", 1))
        if W.b:
            factors.append(("A", -W.b))
    return factors


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b (ties toward zero magnitude)."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def _power(letter: str, n: int) -> SL2Matrix:
    if letter == "A":
        return SL2Matrix(1, n, 0, 1)
    return SL2Matrix(1, 0, -n, 1)


def factor_positive_twists(M: SL2Matrix) -> str:
    """A word over {A, B} whose letterwise product is exactly M.

    Matrices admitting a positive word of length <= 12 get the shortest
    one (cached breadth-first table); everything else is factored into
    signed twist powers by Euclidean reduction and each negative letter
    is rewritten positively.  No minimality is claimed in general.
    """
    hit = _table().get(_key(M))
    if hit is not None:
        return hit
    parts = []
    for factor in _signed_factorization(M):
        kind, n = factor
        if kind == "-I":
            parts.append(_NEG_I)
        elif n > 0:
            parts.append(kind * n)
        else:
            parts.append((_NEG_A if kind == "A" else _NEG_B) * (-n))
    word = "".join(parts)
    assert word_product(word) == M
    return word


def wang_homology(M: SL2Matrix):
    """(rank, torsion) of the first homology of the mapping torus with
    monodromy M: the base circle contributes one free rank, the rest is
    the cokernel of M - I, read off a Smith normal form."""
    from .snf import smith_normal_form
    rel = [[M.a - 1, M.b], [M.c, M.d - 1]]
    snf = smith_normal_form(rel)
    diag = snf.diagonal()
    rank = 1 + sum(1 for d in diag if d == 0)
    torsion = tuple(d for d in diag if d > 1)
    return (rank, torsion)


@dataclass(frozen=True)
class OmegaClassSpec:
    """Twisting data for a torus bundle: the integer pairing with the
    fiber, plus optional auxiliary evaluations on the remaining
    first-homology generators (recorded, not consumed)."""

    fiber_pairing: int
    auxiliary: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class SurgeryStep:
    index: int
    letter: str
    before: SL2Matrix
    after: SL2Matrix
    framing: int
    sphere_pairing: int
    vanishing: VanishingCertificate
    inference: str


@dataclass(frozen=True)
class TerminalComputation:
    tower_length: int
    result: GradedModule
    note: str


@dataclass(frozen=True)
class Conclusion:
    module: GradedModule
    degree: Fraction
    dimension: int
    torsion_spinc_support: bool

    def describe(self) -> str:
        return (f"HF+ = Lambda at degree {self.degree}; "
                "single torsion Spin^c")


@dataclass(frozen=True)
class SurgeryCertificate:
    monodromy: SL2Matrix
    omega: OmegaClassSpec
    word: str
    steps: tuple[SurgeryStep, ...]
    terminal: TerminalComputation
    conclusion: Conclusion
    precision: Fraction = DEFAULT_PRECISION


def build_certificate(monodromy: SL2Matrix, omega: OmegaClassSpec,
                      tower_length: int = 3,
                      precision=DEFAULT_PRECISION) -> SurgeryCertificate:
    """Assemble the certificate chain from the given bundle to the
    reference bundle.  Requires a nonzero fiber pairing."""
    d = omega.fiber_pairing
    if d == 0:
        raise FiberPairingZero(
            "the twisting class must pair nontrivially with the fiber "
            "(omega(F) != 0); nothing is claimed for omega(F) = 0")
    precision = Fraction(precision)
    word = factor_positive_twists(monodromy.inverse() * reference_monodromy())
    steps = []
    current = monodromy
    for i, letter in enumerate(word):
        after = current * TWISTS[letter]
        steps.append(SurgeryStep(
            index=i, letter=letter, before=current, after=after,
            framing=-1, sphere_pairing=d,
            vanishing=sphere_vanishing(d, precision),
            inference=TRIANGLE_INFERENCE))
        current = after
    assert current == reference_monodromy()
    module = trefoil_zero_surgery_module(tower_length)
    result = ucss(module, omega_hom([d]), precision)
    terminal = TerminalComputation(
        tower_length, result,
        "universal-coefficients computation on the reference bundle's "
        "universally twisted homology")
    degree = Fraction(-3, 2)
    conclusion = Conclusion(result, degree, result.dimension(degree),
                            torsion_spinc_support=True)
    return SurgeryCertificate(monodromy, omega, word, tuple(steps),
                              terminal, conclusion, precision)


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failures: tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_certificate(cert: SurgeryCertificate) -> VerificationResult:
    """Recompute every invariant of a certificate from scratch: word
    replay, pairing constancy, per-step vanishing, terminal module
    computation, and the shape of the conclusion."""
    failures = []
    d = cert.omega.fiber_pairing
    if d == 0:
        failures.append("fiber pairing is zero; the chain proves nothing")
    if not is_twist_word(cert.word):
        failures.append(f"word {cert.word!r} has letters outside A/B")
    else:
        if cert.monodromy * word_product(cert.word) != reference_monodromy():
            failures.append(
                "word replay does not carry the monodromy to the reference")
        if len(cert.steps) != len(cert.word):
            failures.append(
                f"{len(cert.steps)} steps recorded for a "
                f"{len(cert.word)}-letter word")
        else:
            current = cert.monodromy
            for step, letter in zip(cert.steps, cert.word):
                where = f"step {step.index}"
                if step.letter != letter:
                    failures.append(f"{where}: letter disagrees with word")
                if step.before != current:
                    failures.append(f"{where}: monodromy chain broken")
                if step.letter in TWISTS and \
                        step.after != step.before * TWISTS[step.letter]:
                    failures.append(f"{where}: twist not applied correctly")
                if step.framing != -1:
                    failures.append(f"{where}: framing must be -1")
                if step.sphere_pairing != d:
                    failures.append(
                        f"{where}: sphere pairing changed along the chain")
                if step.sphere_pairing == 0:
                    failures.append(f"{where}: sphere pairing is zero")
                else:
                    fresh = sphere_vanishing(step.sphere_pairing,
                                             cert.precision)
                    if fresh.verdict != "vanishes":
                        failures.append(f"{where}: vanishing not established")
                    if step.vanishing.verdict != "vanishes":
                        failures.append(
                            f"{where}: recorded verdict is not 'vanishes'")
                    elif (step.vanishing.model_homology
                          != fresh.model_homology
                          or step.vanishing.unit_witness
                          != fresh.unit_witness):
                        failures.append(
                            f"{where}: recorded vanishing data does not "
                            "match recomputation")
                current = step.after
            if cert.steps and cert.steps[-1].after != reference_monodromy():
                failures.append("final monodromy is not the reference")
            if not cert.steps and cert.monodromy != reference_monodromy():
                failures.append(
                    "empty word but monodromy differs from the reference")
    if d != 0:
        module = trefoil_zero_surgery_module(cert.terminal.tower_length)
        fresh = ucss(module, omega_hom([d]), cert.precision)
        if fresh.entries != cert.terminal.result.entries:
            failures.append("terminal computation does not recompute")
        concl = cert.conclusion
        if concl.module.entries != fresh.entries:
            failures.append("conclusion module differs from the terminal "
                            "computation")
        nonzero = [e for e in fresh.entries if e[1]]
        if len(nonzero) != 1 or nonzero[0][1] != 1:
            failures.append("conclusion is not one-dimensional in a single "
                            "degree")
        elif (concl.degree, concl.dimension) != nonzero[0]:
            failures.append("conclusion degree/dimension mismatch")
        if not concl.torsion_spinc_support:
            failures.append("torsion Spin^c support flag must be set")
    return VerificationResult(not failures, tuple(failures))
