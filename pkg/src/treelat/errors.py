"""Exception types shared across the package."""


class TreelatError(Exception):
    """Base class for all library errors."""


class GroupTooLarge(TreelatError):
    """An element-enumeration cap was exceeded."""

    def __init__(self, order, cap):
        super().__init__(f"group of order {order} exceeds enumeration cap {cap}")
        self.order = order
        self.cap = cap


class NonSymmetricSet(TreelatError):
    """A Cayley generating set is not closed under inversion, or contains 1."""


class ActionNotFree(TreelatError):
    """An operation required a free action (free on vertices, no edge inversion)."""


class NotNormal(TreelatError):
    """A subgroup expected to be normal is not."""


class PreconditionFailed(TreelatError):
    """A checked structural precondition does not hold."""


class NotInE(PreconditionFailed):
    """A product instance is outside the basic hypothesis class."""


class QuotientCollapse(TreelatError):
    """A quotient would identify the two endpoints of an edge (loops unsupported)."""


class NotPrimePower(TreelatError):
    """Argument was expected to be a prime power."""


class DatumError(TreelatError):
    """Base class for VH-datum validation failures."""


class BadInverse(DatumError):
    pass


class DuplicatePair(DatumError):
    def __init__(self, a, b):
        super().__init__(f"pair ({a}, {b}) is covered by more than one square")
        self.pair = (a, b)


class IncompleteDatum(DatumError):
    def __init__(self, uncovered):
        super().__init__(f"{len(uncovered)} letter pairs not covered by any square")
        self.uncovered = uncovered


class NonBijectiveLink(DatumError):
    def __init__(self, letter):
        super().__init__(f"link map of letter {letter!r} is not a bijection")
        self.letter = letter
