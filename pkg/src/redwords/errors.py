"""Exception types shared across the package."""


class RedwordsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutationError(RedwordsError, ValueError):
    """The input sequence is not a rearrangement of 1..n."""


class PreconditionError(RedwordsError, ValueError):
    """An operation was called outside its stated domain.

    Examples: a letter out of generator range, a 312-decomposition of a
    permutation containing 312, a vertex missing from a graph.
    """


class TooLargeError(RedwordsError, RuntimeError):
    """An enumeration or all-pairs computation would exceed its cap."""
