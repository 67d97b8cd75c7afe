"""Exception types shared across the package."""


class KanlabError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatch(KanlabError):
    """Morphisms were combined whose domains/codomains do not line up."""


class NameClash(KanlabError):
    """A freshness or disjointness side condition on dimension names failed."""


class DimensionOverflow(KanlabError):
    """An operation would need carriers above the truncation bound."""


class UnknownCube(KanlabError):
    """A cube identifier is not present in the expected carrier."""


class ShapeMismatch(KanlabError):
    """A face family does not have exactly the applicable face maps as keys."""


class AdjacencyViolation(KanlabError):
    """A face family fails the pairwise adjacency condition."""


class FiberMismatch(KanlabError):
    """A transport start point does not lie in the fiber over the line's source."""


class BudgetExhausted(KanlabError):
    """A search ran out of steps before finding an answer or a refutation."""


class ParseError(KanlabError):
    """A file is structurally malformed (bad JSON, missing keys, bad records)."""


class ValidationError(KanlabError):
    """Data is well-formed but semantically inconsistent (law violations)."""
