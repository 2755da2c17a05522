"""Exception hierarchy shared by all modules."""


class GagmaxError(Exception):
    """Base class for every error raised by this package."""


class GraphError(GagmaxError, ValueError):
    """Invalid graph data (asymmetric adjacency, loops, bad indices)."""


class DisconnectedGraphError(GraphError):
    def __init__(self, message: str = "disconnected input") -> None:
        super().__init__(message)


class Graph6Error(GraphError):
    """Malformed graph6 text, or a graph that graph6 short form cannot hold."""


class BudgetExceeded(GagmaxError):
    """A materialization, profile, or pattern budget would be exceeded."""


class CapExceeded(GagmaxError):
    """An enumeration or classification size cap would be exceeded."""


class EmptySphereError(GagmaxError, ValueError):
    def __init__(self, message: str = "no sphere of that radius") -> None:
        super().__init__(message)


class NotAGAGError(GagmaxError, ValueError):
    """The global antipode is the whole vertex set."""


class NotATreeError(GagmaxError, ValueError):
    pass


class NotSphereRegularError(GagmaxError, ValueError):
    pass
