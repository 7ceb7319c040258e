"""Exception hierarchy shared by all modules."""


class ShorSpectraError(Exception):
    pass


class NotCoprimeError(ShorSpectraError, ValueError):
    pass


class DimensionTooLargeError(ShorSpectraError, ValueError):
    pass


class BadDimensionError(ShorSpectraError, ValueError):
    pass


class NotUnitaryError(ShorSpectraError, ValueError):
    pass


class ConvergenceFailure(ShorSpectraError, RuntimeError):
    pass


class EmptySpectrumError(ShorSpectraError, ValueError):
    pass


class DomainError(ShorSpectraError, ValueError):
    pass


class InvalidThetaError(ShorSpectraError, ValueError):
    pass


class ConfigError(ShorSpectraError, ValueError):
    pass


class VerificationFailure(ShorSpectraError):
    """Raised by the verification battery; ``report`` holds every check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
