"""Exception types shared across the package."""


class RootconeError(Exception):
    """Base class for all domain errors raised by this package."""


class NotNaturallyLabeled(RootconeError):
    """A cover (i, j) with i >= j was supplied."""


class RedundantCover(RootconeError):
    """A cover is implied by a chain of other covers."""


class CycleDetected(RootconeError):
    """The supplied relation is not acyclic."""


class EmptyDiagram(RootconeError):
    """A skew diagram with no rows or no columns."""


class EdgesCross(RootconeError):
    """Two straight edge segments of an embedding intersect improperly."""


class NotUpward(RootconeError):
    """An embedding has a cover edge that does not point strictly upward."""


class RegionNotTwoChains(RootconeError):
    """A bounded region has more than one local minimum or maximum."""


class NotANotch(RootconeError):
    """The supplied triple is not a notch of the poset."""


class NotAForest(RootconeError):
    """A graph expected to be acyclic contains an undirected cycle."""


class PoleCreated(RootconeError):
    """A variable substitution collapses a denominator factor to zero."""


class PivotAbsent(RootconeError):
    """A rewriting step was requested on edges not present in the graph."""


class StrategyDiverged(RootconeError):
    """The rewriting engine exceeded its iteration cap."""


class NonForestTerm(RootconeError):
    """A terminated formal sum contains a graph with a cycle."""


class Disconnected(RootconeError):
    """A connected graph was required."""


class NotAlternating(RootconeError):
    """An alternating graph was required."""


class NotSpanningTree(RootconeError):
    """The supplied edge set is not a spanning tree of the host graph."""


class NotInImage(RootconeError):
    """A cell set is not the image of a tree under the path bijection."""


class NotGoodGraph(RootconeError):
    """The rewriting engine requires a good graph (no dominated edges)."""


class NotAdmissible(RootconeError):
    """The Hasse diagram has a biconnected component that is not a cycle."""


class ParseError(RootconeError):
    """An input file does not conform to the documented text formats."""
