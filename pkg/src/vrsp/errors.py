"""Exception hierarchy shared across the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraphError(GraphError):
    """A graph value violates a structural invariant.

    Carries the full diagnostic list so callers can report every violation,
    not just the first one.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"invalid graph: {lines}")


class UnknownVertexError(GraphError):
    """An operation referenced a vertex id that is not in the graph."""


class CycleCreatedError(GraphError):
    """Contracting a vertex set produced a directed cycle.

    ``witness`` lists the vertices of one offending cycle in the would-be
    result graph.
    """

    def __init__(self, witness):
        self.witness = list(witness)
        super().__init__(f"contraction creates a directed cycle: {' -> '.join(self.witness)}")


class EmptyFactorError(GraphError):
    """A product was asked to operate on a graph with no vertices."""


class SizeLimitError(GraphError):
    """An exhaustive operation was given an input above its size bound."""


class DegenerateSplitError(GraphError):
    """A label bipartition left one side empty."""


class NotConnectedError(GraphError):
    """An operation that requires a weakly connected graph got a disconnected one."""


class LabelBudgetError(GraphError):
    """The decomposition search was given more labels than its configured cap."""


class GraphFormatError(GraphError):
    """Input text could not be parsed into a graph, family, or weight token."""
