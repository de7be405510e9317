"""Exception hierarchy shared by all modules."""


class PermCodeError(Exception):
    """Base class for every error raised by this package."""


class InvalidPermutationError(PermCodeError, ValueError):
    pass


class InvalidCyclesError(InvalidPermutationError):
    """Cycles overlap or repeat a symbol."""


class OutOfRangeError(InvalidPermutationError):
    """A symbol would fall below 1."""


class DegreeTooSmallError(InvalidPermutationError):
    pass


class UndefinedNormalizationError(InvalidPermutationError):
    """``stretch`` was asked to normalise the identity, which moves nothing."""


class ParseError(PermCodeError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DomainError(PermCodeError, ValueError):
    """A permutation moves symbols outside the group's degree."""


class InvalidInstanceError(PermCodeError, ValueError):
    pass


class InvalidAssignmentError(PermCodeError, ValueError):
    pass


class InstanceTooLargeError(PermCodeError):
    """An exhaustive search guard was exceeded."""


class EnumerationCapError(InstanceTooLargeError):
    pass


class NotAbelianInvolutiveError(PermCodeError, ValueError):
    """Generators are not pairwise commuting involutions."""
