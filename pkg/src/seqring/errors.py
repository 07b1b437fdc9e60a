"""Exception hierarchy.

Every error carries an ``operation`` attribute naming the library operation
that raised it, so front ends can report where a failure originated without
inspecting tracebacks.
"""

from __future__ import annotations


class SeqRingError(Exception):
    """Base class for all library errors."""

    operation = "seqring"

    def __init__(self, message: str = "", operation: str | None = None):
        super().__init__(message or type(self).__name__)
        if operation is not None:
            self.operation = operation


class InvalidTerm(SeqRingError):
    """A closed-form term violates its invariants (zero base)."""

    operation = "canonicalize"


class NegativePowerDelay(SeqRingError):
    """delay() on a closed form containing a negative power; lower to lazy instead."""

    operation = "delay"


class LazyPatchUnsupported(SeqRingError):
    """patch() applies only to closed forms."""

    operation = "patch"


class LazyInput(SeqRingError):
    """An exact decision was requested on a lazy sequence; use the horizon variant."""

    operation = "compare"


class NonInvertible(SeqRingError):
    """Pointwise reciprocal exists only for single-term closed forms."""

    operation = "pow"


class ZeroDivisor(SeqRingError):
    """Ratio against a quantity that is Frechet-equal to zero."""

    operation = "proportionality_constant"


class DegreeCapExceeded(SeqRingError):
    """Requested summation degree is above the configured cap."""

    operation = "faulhaber_sum"


class BaseOne(SeqRingError):
    """geometric_power_sum with base 1; use faulhaber_sum."""

    operation = "geometric_power_sum"


class NegativePowerTerm(SeqRingError):
    """Series terms with negative powers have no closed-form partial sums here."""

    operation = "partial_sums"


class NotFinite(SeqRingError):
    """standard_part of a quantity that is infinitely great or oscillating."""

    operation = "standard_part"


class DomainViolation(SeqRingError):
    """A function was evaluated outside its domain at sequence index ``index``."""

    operation = "extend"

    def __init__(self, index: int, message: str = "", operation: str | None = None):
        super().__init__(message or f"DomainViolation at index {index}", operation)
        self.index = index


class ZeroProbeValue(SeqRingError):
    """The infinitesimal probe vanished at index ``index``; cannot divide."""

    operation = "derivative"

    def __init__(self, index: int, message: str = ""):
        super().__init__(message or f"ZeroProbeValue at index {index}")
        self.index = index


class ProbeNotInfinitesimal(SeqRingError):
    """A calculus probe must be an infinitesimal quantity."""

    operation = "derivative"


class NotInfinitelyClose(SeqRingError):
    """uniform_continuity_probe requires infinitely close input sequences."""

    operation = "uniform_continuity_probe"


class ExprSyntaxError(SeqRingError):
    """Source text failed to parse; reports position and the expected token set."""

    operation = "parse"

    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"syntax error at {line}:{column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected
