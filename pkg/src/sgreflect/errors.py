"""Exception types shared across the package."""


class SgreflectError(Exception):
    """Base class for all sgreflect errors."""


class EntryOutOfRange(SgreflectError):
    """A multiplication-table entry is not an element index."""

    def __init__(self, row: int, col: int, value: int, order: int):
        self.row, self.col, self.value, self.order = row, col, value, order
        super().__init__(
            f"table[{row}][{col}] = {value} not in range 0..{order - 1}"
        )


class NotAssociative(SgreflectError):
    """First associativity failure, in lexicographic (i, j, k) order."""

    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"({i}*{j})*{k} != {i}*({j}*{k})")


class OrderTooLarge(SgreflectError):
    """Order exceeds a configured hard bound."""


class NotACongruence(SgreflectError):
    """Partition is not compatible with the multiplication."""


class NotInDomain(SgreflectError):
    """Semigroup does not satisfy the domain identities of a variety config."""


class NotInSubvariety(SgreflectError):
    """Target does not satisfy the subvariety identities."""


class CorpusMissing(SgreflectError):
    """No enumerated corpus is available for the requested bound."""


class NotSurjective(SgreflectError):
    """A function required to be surjective is not."""


class SgtParseError(SgreflectError):
    """Malformed .sgt document."""


class OracleDisagreement(SgreflectError):
    """A theorem-based check and its definitional oracle returned different
    verdicts.  This is an internal invariant violation and must never happen."""
