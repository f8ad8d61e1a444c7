"""Exception types shared across the library."""


class LrcError(Exception):
    """Base class for all library errors."""


class BadParams(LrcError):
    """Parameter tuple violates a validity constraint."""


class MissingSubset(LrcError):
    """A rank table does not cover every subset of the ground set."""


class NotInLattice(LrcError):
    """A meet/join argument is not a member of the lattice."""


class NotAlmostAffine(LrcError):
    """Code has a projection whose size is not a power of the alphabet size."""


class SingletonCode(LrcError):
    """Minimum distance is undefined for a code with fewer than two words."""


class RankZero(LrcError):
    """Operation requires a matroid of positive rank."""


class TopNotE(LrcError):
    """The greatest cyclic flat is not the full ground set."""


class NoLocality(LrcError):
    """Matroid does not have the requested (r, delta) locality."""


class ChainStalled(LrcError):
    """No locality set extends the current flat chain (invalid cover)."""


class ConditionViolated(LrcError):
    """A construction's validity conditions failed.

    Carries every violated condition, not just the first, so parameter
    sweeps can report complete diagnostics.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(f"({label}) {msg}" for label, msg in self.violations)
        super().__init__(f"construction conditions violated: {detail}")


class PreconditionFailed(LrcError):
    """A named precondition inequality does not hold."""


class NoDonorPair(LrcError):
    """Nullity redistribution found no intersecting atom pair.

    Under the algorithm's preconditions such a pair must exist, so this
    signals a precondition bug rather than a normal outcome.
    """


class NoExcessNullity(LrcError):
    """Every atom already has the minimum nullity."""


class TooLarge(LrcError):
    """Ground set exceeds the brute-force oracle's size limit."""


class SchemaError(LrcError):
    """A JSON document violates its schema; ``path`` names the bad field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
