"""Exception hierarchy shared across the package.

The service layer maps these onto HTTP status codes (and the CLI onto exit
codes): invalid input and non-member queries are client errors, unknown
reference sets are lookup failures, anything else is internal.
"""


class CitationAnalyticsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(CitationAnalyticsError):
    """Malformed records, files, schemes or parameters."""


class UnknownReferenceSetError(CitationAnalyticsError):
    """A (category, year) key does not resolve to a reference set."""


class NonMemberError(CitationAnalyticsError):
    """A citation count does not occur in a reference set that requires membership."""
