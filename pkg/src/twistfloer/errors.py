"""Exception types shared across the package."""


class TwistFloerError(Exception):
    """Base class for all errors raised by this package."""


class RankMismatch(TwistFloerError):
    """Operands live over group rings with different numbers of variables."""


class NotExact(TwistFloerError):
    """An operation required an exact series but got a truncated one."""


class ZeroUpToPrecision(TwistFloerError):
    """A series with no stored terms below a finite cutoff has no
    determined valuation."""


class InsufficientPrecision(TwistFloerError):
    """A pivot decision during elimination over the Novikov field could not
    be made from the stored terms."""


class NotChainMap(TwistFloerError):
    """A map handed to a cone construction fails to commute with the
    differentials."""


class Unclassified(TwistFloerError):
    """A module operation needed a summand classification that is absent."""


class FiberPairingZero(TwistFloerError):
    """The twisting class evaluates to zero on the fiber, so the main
    vanishing argument does not apply."""


class InvalidComplex(TwistFloerError):
    """A homology computation was asked for on data that is not a chain
    complex (d*d != 0 or inconsistent grading)."""


class UnsupportedComplex(TwistFloerError):
    """Kernel computation over the Laurent ring is only available when
    unit-pivot elimination leaves a generalized-diagonal residual; this
    input is outside that class."""


class RingMismatch(TwistFloerError):
    """Two complexes or elements over different coefficient rings were
    combined."""


class FormatError(TwistFloerError):
    """A serialized document does not conform to the file format."""
