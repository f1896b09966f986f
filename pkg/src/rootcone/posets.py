"""Naturally labeled finite posets stored by their irredundant cover relations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CycleDetected, NotNaturallyLabeled, RedundantCover
from .graphs import LabeledGraph, _reachable, _successors

Cover = tuple[int, int]


@dataclass(frozen=True)
class Poset:
    n: int
    covers: tuple[Cover, ...]

    def hasse_graph(self) -> LabeledGraph:
        return LabeledGraph(self.n, self.covers)


def build_poset(n: int, covers) -> Poset:
    """Validate and build a poset from cover pairs.

    Covers must be naturally labeled (i < j), within [1, n], and irredundant:
    a pair implied by a chain of other covers is rejected.
    """
    if n < 1:
        raise ValueError("poset must have at least one element")
    seen = set()
    for i, j in covers:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"cover ({i}, {j}) outside [1, {n}]")
        if i == j:
            raise CycleDetected(f"cover ({i}, {j}) is a loop")
        if i > j:
            raise NotNaturallyLabeled(f"cover ({i}, {j}) has i > j")
        seen.add((i, j))
    pairs = tuple(sorted(seen))
    succ = _successors(set(pairs), n)
    for i, j in pairs:
        if any(j in _reachable(succ, k) for k in succ[i] if k != j):
            raise RedundantCover(f"cover ({i}, {j}) is implied by other covers")
    return Poset(n, pairs)


@lru_cache(maxsize=None)
def strict_pairs(p: Poset) -> frozenset[Cover]:
    """All pairs (i, j) with i <_P j."""
    succ = _successors(set(p.covers), p.n)
    out = set()
    for v in range(1, p.n + 1):
        for w in _reachable(succ, v):
            out.add((v, w))
    return frozenset(out)


def down_set(p: Poset, a: int) -> frozenset[int]:
    """Principal down-set {x : x <=_P a}."""
    rel = strict_pairs(p)
    return frozenset({a} | {x for x in range(1, p.n + 1) if (x, a) in rel})


def up_set(p: Poset, a: int) -> frozenset[int]:
    rel = strict_pairs(p)
    return frozenset({a} | {x for x in range(1, p.n + 1) if (a, x) in rel})


def is_connected(p: Poset) -> bool:
    return p.hasse_graph().is_connected()


def comparability_components(p: Poset, vertices) -> list[frozenset[int]]:
    """Connected components of the comparability graph restricted to `vertices`."""
    verts = set(vertices)
    rel = strict_pairs(p)
    adj = {v: set() for v in verts}
    for i, j in rel:
        if i in verts and j in verts:
            adj[i].add(j)
            adj[j].add(i)
    comps = []
    left = set(verts)
    while left:
        start = min(left)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(frozenset(seen))
        left -= seen
    return comps


def linear_extensions(p: Poset) -> list[tuple[int, ...]]:
    """All order-preserving listings of the elements, lexicographically sorted.

    A listing w is valid when every element appears after all elements below
    it in the poset.  Choosing the smallest available element first makes the
    output order lexicographic without a final sort.
    """
    preds: dict[int, set[int]] = {v: set() for v in range(1, p.n + 1)}
    for i, j in p.covers:
        preds[j].add(i)
    out: list[tuple[int, ...]] = []
    listing: list[int] = []
    placed: set[int] = set()

    def rec():
        if len(listing) == p.n:
            out.append(tuple(listing))
            return
        for v in range(1, p.n + 1):
            if v not in placed and preds[v] <= placed:
                placed.add(v)
                listing.append(v)
                rec()
                listing.pop()
                placed.remove(v)

    rec()
    return out


def count_extensions_bruteforce(p: Poset) -> int:
    """Independent check: filter all n! permutations by the order relation."""
    from itertools import permutations

    rel = strict_pairs(p)
    count = 0
    for w in permutations(range(1, p.n + 1)):
        pos = {v: k for k, v in enumerate(w)}
        if all(pos[i] < pos[j] for i, j in rel):
            count += 1
    return count
