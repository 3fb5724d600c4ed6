"""Exception hierarchy. The CLI reports ``type(err).__name__`` on stderr."""


class MaximinError(Exception):
    """Base class for domain errors."""


class WrongArity(MaximinError):
    pass


class NotUnit(MaximinError):
    pass


class DuplicateVector(MaximinError):
    pass


class NonFinite(MaximinError):
    pass


class BadIndices(MaximinError):
    pass


class SpectrumTooLarge(MaximinError):
    pass


class AffinelyDependent(MaximinError):
    pass


class WrongField(MaximinError):
    pass


class NoPropertyA(MaximinError):
    pass


class BoundViolated(MaximinError):
    pass


class DuplicateAfterFold(MaximinError):
    pass


class ParseError(MaximinError):
    pass


class NotOnSphere(MaximinError):
    pass


class VerificationFailed(MaximinError):
    pass
