"""Exception taxonomy.

The CLI maps these onto exit codes: input problems exit 1, mathematical
inconsistencies exit 2, exhausted searches and exceeded bounds exit 3.
"""


class StableReductionError(Exception):
    """Base class for every error raised by the package."""

    exit_code = 1


class ParseError(StableReductionError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class InvalidConfiguration(StableReductionError):
    """A configuration failed validation; carries the full report."""

    def __init__(self, report, message: str = "invalid configuration"):
        self.report = report
        super().__init__(f"{message}: " + "; ".join(str(i) for i in report.issues))


class NonIntegralSelfIntersection(StableReductionError):
    pass


class InternalInconsistency(StableReductionError):
    exit_code = 2


class WrongKind(StableReductionError):
    pass


class NotDivisible(StableReductionError):
    pass


class GenusTooSmall(StableReductionError):
    pass


class NonIntegralGenus(StableReductionError):
    exit_code = 2


class NegativeGenus(StableReductionError):
    exit_code = 2


class InvalidDescent(StableReductionError):
    """Structurally malformed descent data (wrong sums, bad matchings)."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid descent data: " + "; ".join(str(i) for i in report.issues))


class GenusNotConserved(StableReductionError):
    exit_code = 2


class NotContractible(StableReductionError):
    pass


class ZariskiViolation(StableReductionError):
    exit_code = 2


class BoundExceeded(StableReductionError):
    exit_code = 3


class TooLarge(BoundExceeded):
    pass


class NoConsistentDescent(StableReductionError):
    exit_code = 3
