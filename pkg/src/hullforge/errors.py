"""Exception hierarchy shared by all hullforge modules."""


class HullforgeError(Exception):
    """Base class for every error raised by this package."""


# --- field construction and element-level errors ---------------------------

class NotPrimeError(HullforgeError):
    pass


class ReducibleModulusError(HullforgeError):
    pass


class DegreeMismatchError(HullforgeError):
    pass


class ZeroElementError(HullforgeError):
    pass


class NotADivisorError(HullforgeError):
    pass


class NotInSubfieldError(HullforgeError):
    pass


class NoPreimageError(HullforgeError):
    """No v with v^(p^l + 1) = u exists; the defining congruence is unsolvable."""


# --- linear algebra ---------------------------------------------------------

class MixedFieldsError(HullforgeError):
    pass


class ShapeMismatchError(HullforgeError):
    pass


# --- codes ------------------------------------------------------------------

class DuplicatePointsError(HullforgeError):
    pass


class ZeroMultiplierError(HullforgeError):
    pass


class TooLargeError(HullforgeError):
    """An exhaustive check would exceed its enumeration budget."""


class DegreeViolationError(HullforgeError):
    pass


class MethodDisagreementError(HullforgeError):
    """Two independent computations of the same quantity differ.

    The equality is a theorem, so a disagreement always signals an
    implementation bug rather than a bad input.
    """


# --- construction families and derived parameters ---------------------------

class PredicateFailedError(HullforgeError):
    """A construction request violates an admissibility bound (named in the message)."""


class NoScalingElementError(HullforgeError):
    """No beta with beta^(p^l + 1) != 1 exists; only possible when q - 1 divides p^l + 1."""


class TheoremMismatchError(HullforgeError):
    """A measured result contradicts the closed-form value it must equal."""


class BoundViolatedError(HullforgeError):
    """A derived parameter set violates the quantum Singleton bound."""


class MalformedDescriptorError(HullforgeError):
    """A serialized descriptor cannot be parsed or violates a type invariant."""
