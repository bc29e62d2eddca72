"""Exception types raised by the library.

Every domain error derives from PermPolyError so callers (and the CLI)
can distinguish bad mathematical input from programming mistakes.
"""


class PermPolyError(Exception):
    """Base class for all domain errors."""


class RingSpecError(PermPolyError):
    """A ring-spec string does not follow the grammar."""


class NonPrimeCharacteristic(PermPolyError):
    """Requested field characteristic is not a prime number."""


class ReducibleModulus(PermPolyError):
    """Supplied modulus polynomial factors over the prime field."""


class TrivialIdeal(PermPolyError):
    """Local ring with k = 1 requested; its maximal ideal would be zero."""


class MixedRings(PermPolyError):
    """Operands belong to different rings."""


class NonUnitInverse(PermPolyError):
    """Inverse requested for an element that is not a unit."""


class NotAField(PermPolyError):
    """Operation is only defined over a finite field."""


class FieldTooSmall(PermPolyError):
    """Construction requires a field with more than two elements."""


class EqualPoints(PermPolyError):
    """The two points of a transposition must differ."""


class ZeroPoint(PermPolyError):
    """The nested transposition construction needs a nonzero point."""


class NotPrimeField(PermPolyError):
    """Construction is stated for prime fields only."""


class NotLocalRing(PermPolyError):
    """Operation needs a local ring with a nonzero maximal ideal."""


class ResidueNotPermutation(PermPolyError):
    """The residue image of the base polynomial does not permute R/M."""


class GNotUnitValued(PermPolyError):
    """The auxiliary polynomial takes a non-unit value on the residue system."""


class CongruentPoints(PermPolyError):
    """The two lift points coincide modulo the maximal ideal."""


class NotBijective(PermPolyError):
    """A permutation table was requested from a non-bijective map."""


class RingTooLarge(PermPolyError):
    """Enumeration-based operation refused: the ring exceeds the size bound."""


class ResidueFieldTooSmall(PermPolyError):
    """The experiment needs a residue field with more than two elements."""
