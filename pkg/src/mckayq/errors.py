"""Exception hierarchy. Each pipeline-level error carries a distinct exit code."""


class MckayError(Exception):
    exit_code = 1


class DivisionByZero(MckayError, ZeroDivisionError):
    pass


class InvalidAutomorphism(MckayError):
    pass


class ParseError(MckayError):
    pass


class SmallnessViolation(MckayError):
    exit_code = 2


class NotSurjectiveOntoGalois(MckayError):
    exit_code = 3


class SplitFieldTooSmall(MckayError):
    exit_code = 4


class CapExceeded(MckayError):
    exit_code = 5


class AmbiguousMultiplicities(MckayError):
    exit_code = 6


class CharDividesOrder(MckayError):
    pass


class NonIntegralMultiplicity(MckayError):
    pass


class OrbitInconsistent(MckayError):
    pass


class NonDivisible(MckayError):
    pass


class ValuationNonIntegral(MckayError):
    pass


class InconsistentConstraints(MckayError):
    pass


class UnknownEntry(MckayError):
    pass
