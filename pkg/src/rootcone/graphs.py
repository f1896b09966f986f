"""Graphs on the vertex set [n] whose edges are directed by their labels.

Every edge is stored as a pair (i, j) with i < j and is understood as
pointing from the smaller to the larger label.  Multiplicity greater than
one is permitted (it occurs transiently inside the rewriting engine) but
most operations expect simple graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop edge ({i}, {j})")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i}, {j}) outside [1, {self.n}]")
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")

    @property
    def distinct_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(set(self.edges)))

    def is_simple(self) -> bool:
        return len(self.edges) == len(set(self.edges))

    def tails(self) -> set[int]:
        return {i for i, _ in self.edges}

    def heads(self) -> set[int]:
        return {j for _, j in self.edges}

    def is_alternating(self) -> bool:
        """No vertex has both an incoming and an outgoing edge."""
        return not (self.tails() & self.heads())

    def is_forest(self) -> bool:
        """Acyclic as an undirected multigraph (a parallel pair is a cycle)."""
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            ri, rj = find(i), find(j)
            if ri == rj:
                return False
            parent[ri] = rj
        return True

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = undirected_adjacency(self)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def labeled_graph(n: int, edges) -> LabeledGraph:
    """Build a LabeledGraph, normalising each pair to (min, max)."""
    norm = [(min(a, b), max(a, b)) for a, b in edges]
    return LabeledGraph(n, tuple(sorted(norm)))


def undirected_adjacency(g: LabeledGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for i, j in g.distinct_edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _successors(edges: set[Edge], n: int) -> dict[int, list[int]]:
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in edges:
        succ[i].append(j)
    return succ


def _reachable(succ: dict[int, list[int]], start: int) -> set[int]:
    seen: set[int] = set()
    stack = list(succ[start])
    while stack:
        v = stack.pop()
        if v not in seen:
            seen.add(v)
            stack.extend(succ[v])
    return seen


@lru_cache(maxsize=None)
def transitive_closure(g: LabeledGraph) -> LabeledGraph:
    """Edge (i, j) present iff an increasing path i -> j exists in g."""
    edges = set(g.distinct_edges)
    succ = _successors(edges, g.n)
    closure = []
    for v in range(1, g.n + 1):
        for w in _reachable(succ, v):
            closure.append((v, w))
    return LabeledGraph(g.n, tuple(sorted(closure)))


@lru_cache(maxsize=None)
def goodify(g: LabeledGraph) -> tuple[LabeledGraph, tuple[Edge, ...]]:
    """Return the good graph spanning the same root cone, plus removed edges.

    Parallel copies are merged silently; an edge (i, j) admitting an
    increasing path of length >= 2 from i to j is dropped and recorded.
    The root cone is unchanged by both operations.
    """
    simple = sorted(set(g.edges))
    succ = _successors(set(simple), g.n)
    removed = []
    for i, j in simple:
        if any(j in _reachable(succ, k) for k in succ[i] if k != j):
            removed.append((i, j))
    kept = tuple(e for e in simple if e not in set(removed))
    return LabeledGraph(g.n, kept), tuple(removed)


def has_increasing_path(g: LabeledGraph, i: int, j: int) -> bool:
    """True iff some increasing path (length >= 1) leads from i to j."""
    succ = _successors(set(g.distinct_edges), g.n)
    return j in _reachable(succ, i)
