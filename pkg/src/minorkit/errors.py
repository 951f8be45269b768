"""Exception hierarchy shared by all minorkit modules."""


class MinorkitError(Exception):
    """Base class for all errors raised by minorkit."""


class CapacityExceededError(MinorkitError):
    """Graph order would exceed the 64-vertex bitmask capacity."""


class LoopEdgeError(MinorkitError):
    """An edge (v, v) was supplied."""


class VertexIndexError(MinorkitError):
    """A vertex index is outside 0..order-1."""


class NotAnEdgeError(MinorkitError):
    """The named vertex pair is not an edge of the graph."""


class NotACliqueError(MinorkitError):
    """A vertex list required to induce a complete subgraph does not."""


class OrderTooLargeError(MinorkitError):
    """Operation contract limits the graph order below what was given."""


class OrderTooSmallError(MinorkitError):
    """Operation contract requires a larger graph order."""


class EmptyGraphError(MinorkitError):
    """Minimum degree of the empty graph is undefined."""


class TrivialPartitionError(MinorkitError):
    """Neighborhood partition has an empty non-neighbor side."""


class ArityMismatchError(MinorkitError):
    """Certificate branch-set count differs from the target order."""


class DisconnectedInputError(MinorkitError):
    """Connectivity is only defined for connected graphs."""


class PreconditionError(MinorkitError):
    """A stated operation precondition does not hold."""


class HypothesisViolatedError(MinorkitError):
    """A lemma hypothesis fails; carries the names of the failing ones."""

    def __init__(self, failed, report=None):
        super().__init__(f"hypotheses violated: {', '.join(failed)}")
        self.failed = list(failed)
        self.report = report


class InternalFailureError(MinorkitError):
    """Search found no certificate where one is guaranteed to exist.

    Either a library bug or a counterexample; the offending graph is
    attached in graph6 form for inspection.
    """

    def __init__(self, message, graph6=None):
        super().__init__(message)
        self.graph6 = graph6


class InfeasibleConstraintsError(MinorkitError):
    """Random-graph constraints admit no simple graph."""


class ParseError(MinorkitError):
    """Malformed graph6 / edge-list / certificate / cockade text."""


class UnreachableOrderError(MinorkitError):
    """Requested cockade order cannot be realized (order < 5)."""
