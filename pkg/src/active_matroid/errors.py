"""Exception hierarchy for the package."""

from __future__ import annotations


class MatroidError(ValueError):
    """Base class for every error raised on bad input."""


class EmptyBases(MatroidError):
    pass


class MixedRank(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(
            f"exchange axiom fails for B1={sorted(b1)}, B2={sorted(b2)}, x={x}"
        )


class RankOutOfRange(MatroidError):
    pass


class NotNested(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class ElementOnWrongSide(MatroidError):
    pass


class EmptyGroundSet(MatroidError):
    pass


class NotInternallyActive(MatroidError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"element {x} is not internally active")


class NotExternallyActive(MatroidError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"element {x} is not externally active")


class EndpointMismatch(MatroidError):
    pass


class MinNotIncreasing(MatroidError):
    def __init__(self, side: str, k: int):
        self.side, self.k = side, k
        super().__init__(f"minima not increasing on the {side} side at k={k}")


class SizeBoundExceeded(MatroidError):
    pass


class NotConnectedFiltration(MatroidError):
    pass


class PartNotABasisOfMinor(MatroidError):
    def __init__(self, k: int, side: str):
        self.k, self.side = k, side
        super().__init__(f"{side} part {k} is not a basis of its minor")


class PartNotUniactive(MatroidError):
    def __init__(self, k: int, side: str):
        self.k, self.side = k, side
        super().__init__(f"{side} part {k} is not uniactive {side}")


class GroundTooSmall(MatroidError):
    pass


class ParseError(MatroidError):
    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class ConsistencyError(AssertionError):
    """Two routes that must agree did not.

    Raised for NotABijection and for disagreeing closure algorithms; never
    expected on valid input, so it signals a bug rather than bad data.
    """


class NotABijection(ConsistencyError):
    pass


class ValidationError(MatroidError):
    """Input parsed fine but does not describe a matroid."""


class UsageError(MatroidError):
    pass
