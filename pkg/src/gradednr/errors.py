"""Exception hierarchy. Every validation error carries a concrete witness."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class; ``witness`` holds the offending element, pair or triple."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(AlgebraError):
    pass


class BadIdentity(AlgebraError):
    pass


class AddNotGroup(AlgebraError):
    pass


class MulNotAssociative(AlgebraError):
    pass


class NotRightDistributive(AlgebraError):
    pass


class NotASubgroup(AlgebraError):
    pass


class NotNormalSubgroup(AlgebraError):
    pass


class NotDirectSum(AlgebraError):
    pass


class NotMultiplicative(AlgebraError):
    pass


class NotAnIdealInput(AlgebraError):
    pass


class NotGradedIdeal(AlgebraError):
    pass


class NotSurjective(AlgebraError):
    pass


class NotAHomomorphism(AlgebraError):
    pass


class MonoidMismatch(AlgebraError):
    pass


class InducedGradingInvalid(AlgebraError):
    pass


class BoundExceeded(AlgebraError):
    pass


class UnknownClaim(KeyError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
