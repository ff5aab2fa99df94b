"""Exception hierarchy shared by every bettilab package."""


class BettiLabError(Exception):
    """Base class for all bettilab errors."""


# hypergraph / complex construction


class HypergraphError(BettiLabError):
    pass


class EmptyEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class NotAntichain(HypergraphError):
    pass


class DegenerateLink(HypergraphError):
    """The link removed a singleton edge, leaving the unit ideal."""


class NotAGraph(HypergraphError):
    pass


class Disconnected(HypergraphError):
    pass


class ColorCountTooSmall(HypergraphError):
    pass


class NotPure(HypergraphError):
    pass


# preconditions of theorems and algorithms


class PreconditionError(BettiLabError):
    pass


class NotAHypertree(PreconditionError):
    pass


class NotAHyperforest(PreconditionError):
    pass


class NotColorable(PreconditionError):
    pass


class ImproperColoring(PreconditionError):
    pass


class NotApplicable(PreconditionError):
    pass


class BadParams(PreconditionError):
    pass


class ZeroParts(PreconditionError):
    pass


# resource caps (CLI exit status 3)


class CapExceeded(BettiLabError):
    pass


class TooManyEdges(CapExceeded):
    pass


class TooManyVertices(CapExceeded):
    pass


class TooManyFaces(CapExceeded):
    pass


class TooLarge(CapExceeded):
    pass


class BudgetExceeded(CapExceeded):
    """Search node budget ran out. `visited` and `found` describe the partial run."""

    def __init__(self, message: str, visited: int = 0, found: int = 0) -> None:
        super().__init__(message)
        self.visited = visited
        self.found = found


class WitnessCheckFailed(BettiLabError):
    """The witness algorithm produced a subset with vanishing homology."""


# input parsing


class ParseError(BettiLabError):
    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotSquarefree(ParseError):
    pass
