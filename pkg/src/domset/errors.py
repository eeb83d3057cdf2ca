"""Exception types raised by the solver suite."""


class DomsetError(Exception):
    """Base class for every error raised by :mod:`domset`."""


class GraphError(DomsetError, ValueError):
    pass


class DisconnectedGraph(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class MalformedHeader(GraphError):
    pass


class EdgeCountMismatch(GraphError):
    pass


class EdgeBudgetOutOfRange(GraphError):
    pass


class InfeasibleSeed(DomsetError, ValueError):
    pass


class AlphaOutOfRange(DomsetError, ValueError):
    pass


class SizeGuardExceeded(DomsetError, ValueError):
    pass


class Exhausted(DomsetError):
    """Every base solution of the current size has been emitted."""


class BudgetExhausted(DomsetError):
    """A search hit its deadline or node cap before finishing."""

    def __init__(self, nodes_visited: int, reason: str = "budget"):
        super().__init__(f"{reason} exhausted after {nodes_visited} nodes")
        self.nodes_visited = nodes_visited
        self.reason = reason
