"""Exception hierarchy shared by all orbitforge modules."""


class OrbitforgeError(Exception):
    """Base class for all orbitforge errors."""


# --- field construction / arithmetic ---

class NotPrimeError(OrbitforgeError):
    """Requested field characteristic is not prime."""


class DegreeMismatchError(OrbitforgeError):
    """Modulus degree does not match the requested extension degree."""


class ReducibleModulusError(OrbitforgeError):
    """Modulus polynomial is not irreducible over the prime field."""


class MixedFieldsError(OrbitforgeError):
    """Operands belong to different fields."""


class DivisionByZeroError(OrbitforgeError):
    """Multiplicative inverse of zero requested."""


class ZeroElementError(OrbitforgeError):
    """Operation requires a nonzero element."""


class FieldTooLargeError(OrbitforgeError):
    """Field exceeds the supported size cap for this operation."""


# --- companion matrix / orbit analysis ---

class NonUnitBError(OrbitforgeError):
    """Companion parameter b must be a unit."""


class ZeroVectorError(OrbitforgeError):
    """Operation requires a nonzero initial vector."""


class WrongClassificationError(OrbitforgeError):
    """Operation does not apply to this root classification."""


class NotPrimePowerError(OrbitforgeError):
    """Operation requires |-b| to be a prime power."""


class PrimePowerOrderError(OrbitforgeError):
    """Construction requires |-b| to not be a prime power."""


# --- abelian order toolkit ---

class NotCoprimeError(OrbitforgeError):
    """Factors of the split must be coprime."""


class ProductMismatchError(OrbitforgeError):
    """Product of the split factors does not equal the group element order."""


# --- Lucas primitive roots ---

class EvenCharacteristicError(OrbitforgeError):
    """LPR machinery is defined for odd characteristic only."""


class WrongResidueClassError(OrbitforgeError):
    """Field cardinality is in the wrong residue class mod 4 for this operation."""


class BadFieldShapeError(OrbitforgeError):
    """Field cardinality is not of the required 2p+1 shape."""


class DegenerateGammaError(OrbitforgeError):
    """gamma = 1 or -1 does not yield a Lucas primitive root."""


# --- CLI ---

class FieldSpecParseError(OrbitforgeError):
    """Malformed field specification string."""
