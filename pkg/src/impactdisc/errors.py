"""Exception hierarchy.

Every error raised by the package derives from :class:`ImpactDiscError` and
falls in exactly one of three families, which the CLI maps to exit codes.
"""


class ImpactDiscError(Exception):
    exit_code = 1


class UsageError(ImpactDiscError, ValueError):
    """Caller passed an argument outside its documented domain."""

    exit_code = 2


class DataError(ImpactDiscError, ValueError):
    """Input data is unusable."""

    exit_code = 3


class CapacityError(ImpactDiscError):
    """Request exceeds what the solver can or will do."""

    exit_code = 4


class TooFewPoints(DataError):
    pass


class NonFiniteValue(DataError):
    def __init__(self, row, value):
        super().__init__(f"non-finite value {value!r} in row {row}")
        self.row = row
        self.value = value


class LengthMismatch(DataError):
    pass


class BadInterval(UsageError):
    pass


class KZero(UsageError):
    pass


class OutOfRange(UsageError):
    pass


class KTooLarge(CapacityError):
    pass


class EnumerationTooLarge(CapacityError):
    def __init__(self, count, cap):
        super().__init__(f"{count} candidate partitionings exceed the enumeration cap of {cap}")
        self.count = count
        self.cap = cap


class DataFileNotFound(DataError, FileNotFoundError):
    pass


class ColumnNotFound(DataError):
    pass


class BadSpec(DataError):
    def __init__(self, field, reason):
        super().__init__(f"{field}: {reason}")
        self.field = field


class WriteFailed(DataError):
    pass
