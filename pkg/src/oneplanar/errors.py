"""Exception hierarchy shared by every module of the package."""


class OnePlanarError(Exception):
    """Base class for all errors raised by oneplanar."""


class InvalidGraph(OnePlanarError):
    """Graph input is not a simple undirected graph."""


class MultiEdge(InvalidGraph):
    """A duplicate edge was supplied or would be created."""


class SelfLoop(InvalidGraph):
    pass


class InvalidVertex(OnePlanarError):
    pass


class DegenerateGraph(OnePlanarError):
    pass


class InvalidParameter(OnePlanarError):
    pass


class ResourceLimit(OnePlanarError):
    """A configured node or cycle budget was exhausted."""


class NotConnected(OnePlanarError):
    pass


class Disconnected(NotConnected):
    pass


class TooFewVertices(OnePlanarError):
    pass


class NoNMatching(OnePlanarError):
    pass


class ParityMismatch(OnePlanarError):
    pass


class InvalidDrawing(OnePlanarError):
    pass


class NotPlanarizable(InvalidDrawing):
    """The associated plane graph admits no planar embedding."""


class MalformedRotation(InvalidDrawing):
    pass


class NotOptimal(OnePlanarError):
    """Edge count differs from 4|V| - 8."""


class NotThreeConnected(OnePlanarError):
    pass


class NoDegreeSixVertex(OnePlanarError):
    pass


class PreconditionFailed(OnePlanarError):
    pass


class ModelInconsistency(OnePlanarError):
    """Drawing data contradicts a structural fact every valid drawing obeys."""


class ParityViolation(ModelInconsistency):
    pass


class TheoremViolation(OnePlanarError):
    """A search failed to find an object that the theory guarantees exists."""


class ParseError(OnePlanarError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
