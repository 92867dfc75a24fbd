"""Exception types raised across the package."""


class GradusError(Exception):
    """Base class for all package errors."""


class RingMismatchError(GradusError, ValueError):
    pass


class InhomogeneousError(GradusError, ValueError):
    """A generator or relation is not homogeneous.

    ``index`` is the offending position in the input list; ``degrees`` the
    multiset of term degrees found.
    """

    def __init__(self, index, degrees, what="generator"):
        self.index = index
        self.degrees = list(degrees)
        super().__init__(f"{what} {index} is not homogeneous (term degrees {self.degrees})")


class NotGIODError(GradusError, ValueError):
    """M/IM has infinite length; ``witness`` names a variable with no pure power."""

    def __init__(self, witness, component=0):
        self.witness = witness
        self.component = component
        super().__init__(
            f"ideal is not a graded ideal of definition: no power of {witness} "
            f"lies in the leading-term module at component e{component + 1}")


class SamuelFitError(GradusError, ArithmeticError):
    pass


class GsopSearchError(GradusError, RuntimeError):
    """No candidate succeeded within the try budget; ``partial`` holds the chain so far."""

    def __init__(self, message, partial=()):
        self.partial = list(partial)
        super().__init__(message)


class NotAGsopError(GradusError, ValueError):
    pass


class KoszulCertificationError(GradusError, RuntimeError):
    pass


class UnitIdealError(GradusError, ValueError):
    pass


class NotMinimalPrimeError(GradusError, ValueError):
    pass


class ProblemParseError(GradusError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
