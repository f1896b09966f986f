"""Combinatorial triangulation machinery for root polytopes of graphs.

Spanning-tree enumeration by deletion/contraction, externally semi-active
counts, the ext-zero triangulation of an alternating graph, the
noncrossing-tree triangulation of a skew bipartite graph with its lattice
path bijection, and the bipartition decomposition that reduces an arbitrary
poset to alternating pieces.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, NotAlternating, NotInImage, NotSpanningTree
from .graphs import Edge, LabeledGraph, transitive_closure, undirected_adjacency
from .posets import Poset
from .skew import Cell, SkewDiagram, x_label, y_label


class EdgeOrder:
    """A total order on the edges of a graph."""

    def __init__(self, sequence):
        self.sequence = tuple(sequence)
        self.rank = {e: k for k, e in enumerate(self.sequence)}
        if len(self.rank) != len(self.sequence):
            raise ValueError("edge order contains a repeated edge")

    @classmethod
    def lex(cls, edges) -> "EdgeOrder":
        return cls(sorted(set(edges)))

    def key(self, edge: Edge) -> int:
        return self.rank[edge]


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


def spanning_trees(g: LabeledGraph) -> list[LabeledGraph]:
    """All spanning trees by recursive deletion/contraction on a union-find."""
    if not g.is_simple():
        raise ValueError("spanning tree enumeration expects a simple graph")
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    edges = sorted(g.edges)
    need = g.n - 1
    out: list[LabeledGraph] = []

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def rec(idx: int, parent: list[int], chosen: list[Edge], need: int):
        if need == 0:
            out.append(LabeledGraph(g.n, tuple(chosen)))
            return
        if len(edges) - idx < need:
            return
        i, j = edges[idx]
        ri, rj = find(parent, i), find(parent, j)
        if ri != rj:
            p2 = list(parent)
            p2[ri] = rj
            chosen.append((i, j))
            rec(idx + 1, p2, chosen, need - 1)
            chosen.pop()
        rec(idx + 1, parent, chosen, need)

    rec(0, list(range(g.n + 1)), [], need)
    out.sort(key=lambda t: t.edges)
    return out


def _tree_path_edges(t: LabeledGraph, u: int, v: int) -> list[Edge]:
    """Edges of the unique u-v path in the tree t, in walk order from u."""
    adj = undirected_adjacency(t)
    parent: dict[int, int] = {u: 0}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                stack.append(w)
    path = []
    x = v
    while x != u:
        path.append((min(x, parent[x]), max(x, parent[x])))
        x = parent[x]
    path.reverse()
    return path


def ext_count(g: LabeledGraph, order: EdgeOrder, t: LabeledGraph) -> int:
    """Number of externally semi-active non-tree edges of g with respect to t.

    For a non-tree edge e, let C be the unique cycle of t + e and e* the
    order-maximal edge of C.  e is semi-active when e = e* or an odd number
    of cycle edges lies between e and e*; the two arcs have equal parity
    because alternating graphs only have even cycles, and that equality is
    asserted rather than assumed.
    """
    if not g.is_alternating():
        raise NotAlternating("host graph must be alternating")
    tree_edges = set(t.edges)
    if (
        t.n != g.n
        or len(t.edges) != g.n - 1
        or not tree_edges <= set(g.distinct_edges)
        or not t.is_forest()
        or not t.is_connected()
    ):
        raise NotSpanningTree("not a spanning tree of the host graph")
    count = 0
    for e in g.distinct_edges:
        if e in tree_edges:
            continue
        u, v = e
        cycle = [e] + _tree_path_edges(t, v, u)
        size = len(cycle)
        if size % 2:
            raise NotAlternating("odd cycle encountered in an alternating graph")
        star_idx = max(range(size), key=lambda k: order.key(cycle[k]))
        if star_idx == 0:
            count += 1
            continue
        forward = star_idx - 1
        backward = size - 1 - star_idx
        assert forward % 2 == backward % 2
        if forward % 2 == 1:
            count += 1
    return count


def ext_zero_triangulation(g: LabeledGraph, order: EdgeOrder | None = None) -> list[LabeledGraph]:
    """Spanning trees with no externally semi-active edge; they tile the cone."""
    if order is None:
        order = EdgeOrder.lex(g.edges)
    return [t for t in spanning_trees(g) if ext_count(g, order, t) == 0]


def compatible(t1: LabeledGraph, t2: LabeledGraph) -> bool:
    """Simplex compatibility: the union digraph (t1 forward, t2 reversed)
    must have no directed cycle on three or more vertices."""
    n = max(t1.n, t2.n)
    succ: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for i, j in t1.distinct_edges:
        succ[i].add(j)
    for i, j in t2.distinct_edges:
        succ[j].add(i)

    def has_cycle_from(start: int) -> bool:
        # simple directed cycles through `start` with all vertices >= start
        stack = [(start, frozenset({start}), 0)]
        while stack:
            v, seen, length = stack.pop()
            for w in succ[v]:
                if w == start and length >= 2:
                    return True
                if w > start and w not in seen:
                    stack.append((w, seen | {w}, length + 1))
        return False

    return not any(has_cycle_from(v) for v in range(1, n + 1))


def _noncrossing(edges, pos: dict[int, int]) -> bool:
    es = [tuple(sorted((pos[i], pos[j]))) for i, j in edges]
    for k, (a, b) in enumerate(es):
        for c, d in es[k + 1 :]:
            if a < c < b < d or c < a < d < b:
                return False
    return True


def noncrossing_alternating_trees(gd: LabeledGraph, line_order) -> list[LabeledGraph]:
    """Spanning trees that are alternating and noncrossing in the drawing
    whose left-to-right vertex order is `line_order`.  A disconnected graph
    simply has none."""
    if not gd.is_connected():
        return []
    pos = {v: k for k, v in enumerate(line_order)}
    out = [
        t
        for t in spanning_trees(gd)
        if t.is_alternating() and _noncrossing(t.edges, pos)
    ]
    out.sort(key=lambda t: t.edges)
    return out


def tree_to_path(d: SkewDiagram, t: LabeledGraph) -> tuple[Cell, ...]:
    """Cells {(i, j) : (x_i, y_j) in t}, sorted into the south/west walk."""
    cells = set()
    for u, v in t.edges:
        if not (1 <= u <= d.r < v <= d.r + d.c):
            raise NotInImage(f"edge ({u}, {v}) is not an x-y edge of the diagram graph")
        cells.add((d.r + 1 - u, v - d.r))
    return _cells_to_path(d, cells)


def _cells_to_path(d: SkewDiagram, cells: set[Cell]) -> tuple[Cell, ...]:
    path = sorted(cells)
    if not path or path[0] != (1, 1) or path[-1] != (d.r, d.c):
        raise NotInImage("cell set does not run from (1,1) to (r,c)")
    for cell in path:
        if cell not in d:
            raise NotInImage(f"cell {cell} outside the diagram")
    for (i1, j1), (i2, j2) in zip(path, path[1:]):
        if (i2, j2) not in ((i1 + 1, j1), (i1, j1 + 1)):
            raise NotInImage("cell set is not a unit south/west walk")
    return tuple(path)


def path_to_tree(d: SkewDiagram, cells) -> LabeledGraph:
    """Inverse of tree_to_path; raises NotInImage off the bijection's image."""
    path = _cells_to_path(d, set(cells))
    edges = [(x_label(d, i), y_label(d, j)) for i, j in path]
    return LabeledGraph(d.r + d.c, tuple(sorted(edges)))


def decompose_lr(p: Poset) -> list[tuple[Bipartition, LabeledGraph]]:
    """Bipartitions (L, R) of [n] whose induced closure edges L -> R form a
    connected spanning graph; the pieces' cones tile the root cone of P.

    The closure itself is used, not its goodification: stripping dominated
    closure edges would delete exactly the edges the pieces need.
    """
    n = p.n
    closure = transitive_closure(p.hasse_graph())
    out: list[tuple[Bipartition, LabeledGraph]] = []
    seen_edge_sets = set()
    for mask in range(2**n):
        left = frozenset(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
        right = frozenset(range(1, n + 1)) - left
        edges = tuple(
            e for e in closure.edges if e[0] in left and e[1] in right
        )
        piece = LabeledGraph(n, edges)
        if not piece.is_connected():
            continue
        if piece.edges in seen_edge_sets:
            continue
        seen_edge_sets.add(piece.edges)
        out.append((Bipartition(left, right), piece))
    return out
