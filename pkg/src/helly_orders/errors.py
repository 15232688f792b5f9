"""Exception types raised across the package."""


class HypergraphError(ValueError):
    """Base class for invalid instances, orders and parameters."""


class BadArity(HypergraphError):
    pass


class MarkNotInEdge(HypergraphError):
    pass


class DuplicateBoundary(HypergraphError):
    """A boundary pair that is not two distinct vertices (or min&max with A == B)."""


class DuplicateEdge(HypergraphError):
    pass


class OrderNotOverSubset(HypergraphError):
    pass


class WrongVariant(HypergraphError):
    pass


class WrongArity(HypergraphError):
    pass


class BadParity(HypergraphError):
    pass


class ColoringSpaceTooLarge(HypergraphError):
    pass


class BudgetExceeded(HypergraphError):
    pass


class ParseError(HypergraphError):
    pass
