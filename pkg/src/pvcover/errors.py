"""Exception hierarchy shared by all pvcover modules."""


class PvcError(Exception):
    """Base class for all pvcover errors."""


class UnknownVertex(PvcError):
    pass


class MalformedPatch(PvcError):
    pass


class EmptyRootSet(PvcError):
    pass


class LimitExceeded(PvcError):
    """An enumeration guard (path count, family size, state count) was hit."""


class SizeLimitExceeded(PvcError):
    """An exact/enumeration routine was asked to run beyond its size guard."""


class UnknownOracle(PvcError, KeyError):
    pass


class EmptyFamily(PvcError):
    pass


class FamilyPropertyViolated(PvcError):
    """A candidate family member failed the coverage property it must satisfy."""


class ParseError(PvcError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class WeightMismatch(PvcError):
    pass


class InfeasibleConfig(PvcError):
    pass
