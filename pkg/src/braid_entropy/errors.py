"""Exception hierarchy shared by every module of the package."""


class BraidEntropyError(Exception):
    """Base class for all errors raised by braid_entropy."""


class MalformedWord(BraidEntropyError, ValueError):
    """Braid word text that is not a list of nonzero signed integers."""


class IndexOutOfRange(BraidEntropyError, ValueError):
    """A generator index that does not exist for the given strand count."""


class InvalidPunctureCount(BraidEntropyError, ValueError):
    pass


class InvalidScale(BraidEntropyError, ValueError):
    pass


class EmptyLamination(BraidEntropyError, ValueError):
    """The zero coordinate vector has no intersection count to take a log of."""


class FloatOverflow(BraidEntropyError, ArithmeticError):
    """A non-finite value showed up in the floating-point orbit engine."""


class ResourceLimit(BraidEntropyError):
    """An exact coordinate grew past the configured digit cap."""


class InsufficientData(BraidEntropyError, ValueError):
    pass


class NonConvergence(BraidEntropyError):
    """An estimator reached its iteration cap without meeting its tolerance."""
