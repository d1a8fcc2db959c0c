"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph input: out-of-range endpoint, self-loop, bad file."""


class PreconditionError(ValueError):
    """Operation called on a graph that violates its precondition."""


class NotStronglyConnectedError(PreconditionError):
    """Operation requires a strongly connected graph."""


class OracleSizeError(ValueError):
    """Brute-force oracle invoked above its hard size guard."""
