"""Exception types shared across the package."""


class PackedLvError(Exception):
    """Base class for all packedlv errors."""


class WidthError(PackedLvError):
    """A value does not fit its field, or a field does not fit a word."""


class ShapeError(PackedLvError):
    """Two packed sequences disagree on field width, length, or word size."""


class DomainError(PackedLvError):
    """An entry is outside the domain of a packed function."""


class BudgetError(PackedLvError):
    """A lookup table would exceed the configured memory budget."""


class ReservedByteError(PackedLvError):
    """Input text or pattern contains a byte reserved for sentinels."""
