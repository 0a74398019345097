"""Exception types raised by the library."""


class NLieError(Exception):
    """Base class for every error raised by nlie."""


class DimensionMismatch(NLieError, ValueError):
    pass


class ParameterError(NLieError, ValueError):
    """Builder or operation parameters outside their legal range."""


class NotAnIdeal(NLieError, ValueError):
    pass


class NotASubalgebra(NLieError, ValueError):
    pass


class NotIsotropic(NLieError, ValueError):
    pass


class VerificationError(NLieError):
    """An algebra or form failed a check that the operation relies on."""


class ClassificationInconsistency(NLieError):
    """Computed invariants contradict the case they select.

    This only happens for inputs outside the classification's hypotheses
    (or an internal bug); ``profile`` holds the offending invariants.
    """

    def __init__(self, message: str, profile: dict | None = None):
        super().__init__(message)
        self.profile = profile or {}


class ParseError(NLieError, ValueError):
    pass
