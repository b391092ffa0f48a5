"""
Exceptions raised by the wild_mckay package.

Everything derives from WildMcKayError so callers can catch the whole family,
while DomainError and ParseError also behave like ValueError for code that
already expects that.
"""


class WildMcKayError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(WildMcKayError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotConnectedError(DomainError):
    """
    Raised when an operation needs a connected cover (j_0 set) but was handed
    an order tuple whose first entry is BOTTOM.
    """


class HypothesisError(DomainError):
    """
    A theorem's hypotheses do not hold for the given representation.

    :param hypothesis: short name of the violated hypothesis, e.g.
                       'no pseudo-reflection'
    :param message: the full explanation
    """
    def __init__(self, hypothesis, message):
        super(HypothesisError, self).__init__(message)
        self.hypothesis = hypothesis


class ParseError(WildMcKayError, ValueError):
    """Malformed command-line or JSON text."""
