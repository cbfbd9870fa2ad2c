# coalescence/errors.py


class CoalescenceError(Exception):
    """Base class for every error raised by the coalescence package."""


class ParameterError(CoalescenceError, ValueError):
    """A precondition on the numeric parameters (n, k, r, t, ...) does not hold."""


class GuardRangeError(ParameterError):
    """An exhaustive enumeration was asked for beyond its configured guard."""


class BijectionError(CoalescenceError, ValueError):
    """Input to one of the bijection steps is malformed or inconsistent."""


class WiringError(BijectionError):
    """The wirings do not concatenate all edges into a single cycle."""


class ArborescenceError(BijectionError):
    """The last exits of the non-root vertices do not form a tree directed towards the root."""


class PartitionError(BijectionError):
    """A sequence and a cycle do not jointly partition the ground set."""


class StripError(BijectionError):
    """A strip, or a strip triple, violates its shape constraints."""
