"""Exception types shared across the library and the CLI."""


class InvpolyError(Exception):
    """Base class for all library errors."""


class InputError(InvpolyError, ValueError):
    """Malformed input: bad h-sequence, bad pair set, bad JSON."""


class NoDescentError(InvpolyError):
    """A nonempty pair set without any descent pair has no maximum descent.

    Such a set is never admissible, so asking for it usually signals a bug
    in the caller.
    """


class InadmissibleSetError(InvpolyError):
    """An expansion was requested for a set that is not h-admissible."""


class BoundExceededError(InvpolyError):
    """A brute-force enumeration was requested above the configured cap."""


class BelowValidityFloorError(InvpolyError):
    """A closed-form expansion was evaluated below the n where it counts.

    The polynomial is still well defined there; use the raw evaluator if
    you want its value as a polynomial rather than as a count.
    """


class PosetCycleError(InvpolyError):
    """Order relations produced a cycle; indicates an admissibility bug."""
