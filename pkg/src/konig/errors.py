"""Exception hierarchy.

Every error carries a stable machine-readable ``name`` (the class name) which
the command-line front end reports verbatim.
"""

from __future__ import annotations


class KonigError(Exception):
    """Base class for all precondition failures raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


class IndexOutOfBounds(KonigError):
    pass


class SelfLoop(KonigError):
    pass


class NotBipartite(KonigError):
    """Raised with the odd closed walk that proves the graph is not bipartite."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph contains an odd closed walk of length {len(witness.edges)}")


class KTooSmall(KonigError):
    pass


class InvalidColoring(KonigError):
    pass


class InternalInvariantViolation(KonigError):
    pass


class NotRegular(KonigError):
    pass


class ZeroDegree(KonigError):
    pass


class NotDivisible(KonigError):
    pass


class InvalidFactor(KonigError):
    pass


class DTooLarge(KonigError):
    pass


class NotPowerOfTwo(KonigError):
    pass


class NegativeEntry(KonigError):
    pass


class NonIntegerEntry(KonigError):
    pass


class UnequalLineSums(KonigError):
    pass


class ZeroSum(KonigError):
    pass


class IrregularSupport(KonigError):
    pass


class TooLarge(KonigError):
    pass


class UnknownFixture(KonigError):
    pass


class Infeasible(KonigError):
    pass


class ParseError(KonigError):
    pass
