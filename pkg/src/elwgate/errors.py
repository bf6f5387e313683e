"""Exception types raised by elwgate."""


class ElwError(ValueError):
    """Base class for domain errors (CLI maps these to exit code 3)."""


class NotHermitian(ElwError):
    pass


class NotTraceless(ElwError):
    pass


class NotUnitary(ElwError):
    pass


class NotSymmetric(ElwError):
    pass


class NotNormalized(ElwError):
    pass


class InvalidEpsilon(ElwError):
    pass


class DegeneratePolynomial(ElwError):
    pass


class NotRootVector(ElwError):
    pass


class NotMaximallyEntangled(ElwError):
    pass


class SymmetrizationIncomplete(ElwError):
    pass


class OutOfDomain(ElwError):
    pass
