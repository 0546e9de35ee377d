"""Exception types raised across the package."""


class HbsError(Exception):
    """Base class for all package errors."""


class InvalidParams(HbsError, ValueError):
    pass


class NodeDetected(HbsError, ValueError):
    """The offset puts a zero inside the range of the seed state."""


class OutOfTable(HbsError, ValueError):
    pass


class DivisionNearNode(HbsError, ArithmeticError):
    pass


class DomainError(HbsError, ValueError):
    pass


class NonPositiveScale(HbsError, ValueError):
    pass


class ConstraintPole(HbsError, ValueError):
    """u1 * a == 1, where the central strength diverges."""


class GridMismatch(HbsError, ValueError):
    pass


class BoundaryNotDecayed(HbsError, ValueError):
    pass


class EnergyNonPositive(HbsError, ValueError):
    pass


class EdgeNotFlat(HbsError, ValueError):
    pass


class DomainTooSmall(HbsError):
    """Raised internally when a state's decay length exceeds the window."""
