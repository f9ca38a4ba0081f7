"""Typed errors raised across the package.

Every error is a subclass of :class:`SchurCodesError`; the CLI maps them to
exit codes (validation errors -> 2, budget exhaustion -> 3).
"""


class SchurCodesError(Exception):
    """Base class for all package errors."""


class NonPrimeError(SchurCodesError, ValueError):
    """Field characteristic is not prime."""


class ReducibleModulusError(SchurCodesError, ValueError):
    """Supplied modulus polynomial is not irreducible over GF(p)."""


class UnsupportedFieldError(SchurCodesError, ValueError):
    """No built-in modulus for this (p, m) and none was supplied."""


class DivisionByZeroError(SchurCodesError, ZeroDivisionError):
    """Division or inversion of the zero element."""


class FieldMismatchError(SchurCodesError, ValueError):
    """Operands belong to different fields."""


class LengthMismatchError(SchurCodesError, ValueError):
    """Vector or code lengths are incompatible."""


class IndexOutOfRangeError(SchurCodesError, IndexError):
    """Coordinate index outside 0..n-1."""


class ZeroCodeError(SchurCodesError, ValueError):
    """Operation undefined on the zero code."""


class BudgetExceededError(SchurCodesError):
    """Exhaustive enumeration would exceed the configured budget."""

    def __init__(self, required, budget):
        super().__init__(f"enumeration of {required} items exceeds budget {budget}")
        self.required = required
        self.budget = budget


class NotUnitalError(SchurCodesError, ValueError):
    """Algebra basis does not contain the all-one vector."""


class NotAnAlgebraError(SchurCodesError, ValueError):
    """Basis is not closed under componentwise multiplication."""


class NotFullSupportError(SchurCodesError, ValueError):
    """Code does not have full support."""


class RepeatedEvaluationPointError(SchurCodesError, ValueError):
    """Evaluation points are not pairwise distinct."""


class NonInvertibleMultiplierError(SchurCodesError, ValueError):
    """Multiplier vector has a zero entry."""


class LengthExceedsFieldError(SchurCodesError, ValueError):
    """Requested length exceeds q + 1 distinct evaluation points."""


class PreconditionViolatedError(SchurCodesError, ValueError):
    """Input violates a documented precondition."""


class AmbiguousSolutionSpaceError(SchurCodesError):
    """Diagonal-equivalence candidate space too large to enumerate."""


class HypothesesUnmetError(SchurCodesError, ValueError):
    """Structural hypotheses of a recovery routine do not hold."""


class RecoveryFailedError(SchurCodesError):
    """A recovery step that should have succeeded did not."""


class PatternViolationError(SchurCodesError):
    """Column pattern incompatible with a joint evaluation structure."""


class DuplicateEvaluationPointError(SchurCodesError):
    """Extension produced a repeated evaluation point."""


class NotPmdsError(SchurCodesError, ValueError):
    """Pair is not Product-MDS (or is degenerate for classification)."""


class InternalTheoremViolationError(SchurCodesError):
    """A guaranteed structural consequence failed; indicates a bug."""


class SearchExhaustedError(SchurCodesError):
    """Randomized construction search hit its retry limit."""
