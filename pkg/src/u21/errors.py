"""Exception types shared across the package."""


class U21Error(Exception):
    """Base class for all package errors."""


# -- finite fields ----------------------------------------------------------

class NonPrimeCharacteristic(U21Error):
    pass


class FieldTooLarge(U21Error):
    pass


class ZeroArgument(U21Error):
    pass


class NoSuchRoot(U21Error):
    """n-th root of unity does not exist; enlarge the coefficient field."""


# -- groups ------------------------------------------------------------------

class EvenCharacteristic(U21Error):
    pass


class UnsupportedRank(U21Error):
    pass


class EnumerationTooLarge(U21Error):
    pass


class NotInGroup(U21Error):
    pass


# -- modules -----------------------------------------------------------------

class BadPrime(U21Error):
    pass


class FieldMismatch(U21Error):
    pass


class FormatError(U21Error):
    """Malformed FMOD file; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- meataxe -----------------------------------------------------------------

class NotIrreducible(U21Error):
    pass


class NotRankTwo(U21Error):
    pass


class AmbiguousParameter(U21Error):
    pass


class SplitBudgetExceeded(U21Error):
    """Candidate budget exhausted without certifying or splitting."""


# -- hecke -------------------------------------------------------------------

class BadParams(U21Error):
    pass


class SubgroupMismatch(U21Error):
    pass


# -- classify ----------------------------------------------------------------

class UnsupportedCase(U21Error):
    """The requested congruence regime is not covered; never guessed."""


class MismatchedParameters(U21Error):
    pass
