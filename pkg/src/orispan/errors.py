"""Exception types shared across the package."""


class SpannerError(Exception):
    """Base class for all domain errors raised by orispan."""


class GeometryError(SpannerError):
    """Bad point data: duplicates, collinear degeneracies, parameter domain."""


class GraphError(SpannerError):
    """Bad graph data: antiparallel pairs, duplicate edges, wrong structure."""


class NotOrientableError(SpannerError):
    """A triangulation admits no orientation with every face a directed cycle."""


class GuardError(SpannerError):
    """An exhaustive routine was asked to exceed its configured size guard."""


class TooFewPointsError(SpannerError):
    """Raised where oriented cycles need at least three points."""
