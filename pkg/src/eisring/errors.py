"""Exception hierarchy for domain errors.

Every exception is a ``ValueError`` so callers that do not care about the
precise failure mode can still catch broadly.
"""


class DomainError(ValueError):
    """Base class for all input-domain violations raised by this package."""


class ZeroModulus(DomainError):
    """A modulus (divisor) was zero."""


class ZeroInput(DomainError):
    """An operation that needs a nonzero value received zero."""


class BothZero(DomainError):
    """gcd of (0, 0) is undefined."""


class UnitOrZero(DomainError):
    """Prime classification needs a nonzero non-unit."""


class ZeroIdealGenerator(DomainError):
    """Ideal membership against the zero ideal generator."""


class NoSuitableAssociate(DomainError):
    """No associate of the modulus satisfies the coprimality condition."""


class LengthMismatch(DomainError):
    """Vector operands of different lengths."""


class NotPrimitiveModulus(DomainError):
    """Partition construction that requires a primitive modulus (t = 1)."""


class NotAFactorization(DomainError):
    """Requested split sizes do not factor the quantity they must factor."""


class BadFactorOfT(DomainError):
    """Requested factors do not factor the integer content t of the modulus."""


class SpanTooLarge(DomainError):
    """Materializing the span would exceed the configured size bound."""


class TooFewWords(DomainError):
    """Minimum distance needs at least two codewords."""


class ReduciblePolynomial(DomainError):
    """The defining polynomial of a field extension must be irreducible."""


class NotPrimeModulus(DomainError):
    """Field construction over a composite (or unit/zero) modulus."""


class CardinalityMismatch(DomainError):
    """Paired constellations must have the same number of points."""
