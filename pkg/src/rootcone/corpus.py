"""Test corpora: named small posets, exhaustive enumeration of naturally
labeled posets, seeded random generation, and skew diagram enumeration."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .graphs import LabeledGraph
from .posets import Poset, build_poset
from .skew import SkewDiagram, build_skew


def chain(n: int) -> Poset:
    return build_poset(n, [(k, k + 1) for k in range(1, n)])


def antichain(n: int) -> Poset:
    return build_poset(n, [])


def diamond() -> Poset:
    return build_poset(4, [(1, 2), (1, 3), (2, 4), (3, 4)])


def diamond_embedding():
    return {1: (0, 0), 2: (-1, 1), 3: (1, 1), 4: (0, 2)}


def vee() -> Poset:
    return build_poset(3, [(1, 2), (1, 3)])


def wedge() -> Poset:
    return build_poset(3, [(1, 3), (2, 3)])


def crown22() -> Poset:
    """The 2x2 crown: two minima each below two maxima; its Hasse graph is a
    4-cycle, so the poset is admissible but not strongly planar."""
    return build_poset(4, [(1, 3), (1, 4), (2, 3), (2, 4)])


def crown22_embedding():
    return {1: (-1, 0), 2: (1, 0), 3: (0, 1), 4: (0, 2)}


def theta() -> Poset:
    """Two bounded regions sharing a chain; both have min 1 and max 5."""
    return build_poset(5, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)])


def theta_embedding():
    return {1: (0, 0), 2: (-2, 1), 3: (0, 1), 4: (2, 1), 5: (0, 2)}


def ladder(k: int):
    """k vertically stacked diamond cells; returns (poset, embedding).

    Cell i has bottom 3i-2, middles 3i-1 and 3i, and top 3i+1, which is the
    next cell's bottom.  Strongly planar with k bounded regions.
    """
    covers = []
    for i in range(1, k + 1):
        b, m1, m2, t = 3 * i - 2, 3 * i - 1, 3 * i, 3 * i + 1
        covers += [(b, m1), (b, m2), (m1, t), (m2, t)]
    emb = {}
    for i in range(1, k + 1):
        emb[3 * i - 2] = (0, 2 * (i - 1))
        emb[3 * i - 1] = (-1, 2 * i - 1)
        emb[3 * i] = (1, 2 * i - 1)
    emb[3 * k + 1] = (0, 2 * k)
    return build_poset(3 * k + 1, covers), emb


def _transitive_reduction(n: int, closed: frozenset) -> list[tuple[int, int]]:
    rel = set(closed)
    return [
        (i, j)
        for i, j in rel
        if not any((i, k) in rel and (k, j) in rel for k in range(i + 1, j))
    ]


def _close(n: int, pairs) -> frozenset:
    g = LabeledGraph(n, tuple(sorted(set(pairs))))
    from .graphs import transitive_closure

    return frozenset(transitive_closure(g).edges)


def all_natural_posets(n: int, connected_only: bool = False) -> list[Poset]:
    """Every partial order on [n] compatible with the natural labels.

    A natural partial order is exactly a transitively closed subset of the
    pairs (i, j) with i < j, so enumerating edge subsets and deduplicating
    their closures is exhaustive.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    seen = set()
    out = []
    for mask in range(2 ** len(pairs)):
        chosen = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        closed = _close(n, chosen) if chosen else frozenset()
        if closed in seen:
            continue
        seen.add(closed)
        p = build_poset(n, _transitive_reduction(n, closed))
        if connected_only and not p.hasse_graph().is_connected():
            continue
        out.append(p)
    out.sort(key=lambda p: p.covers)
    return out


def iso_representatives(posets) -> list[Poset]:
    """One poset per isomorphism class, keyed by the minimal relabeled relation."""
    seen = set()
    out = []
    for p in posets:
        from .posets import strict_pairs

        rel = strict_pairs(p)
        key = min(
            tuple(sorted((perm[i - 1], perm[j - 1]) for i, j in rel))
            for perm in permutations(range(1, p.n + 1))
        )
        key = (p.n, key)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def corpus_gen(seed: int, n_max: int, count: int) -> list[Poset]:
    """Seeded random connected posets: keep each pair (i, j), i < j, with
    probability 1/2, reduce transitively, retain the connected results."""
    if n_max > 9:
        raise ValueError("n_max above 9 makes the extension oracle infeasible")
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, n_max)
        chosen = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.5
        ]
        closed = _close(n, chosen) if chosen else frozenset()
        p = build_poset(n, _transitive_reduction(n, closed))
        if p.hasse_graph().is_connected():
            out.append(p)
    return out


def all_skew_diagrams(max_r: int, max_c: int) -> list[SkewDiagram]:
    """Every skew diagram with r <= max_r rows and c <= max_c columns."""
    out = []
    for r in range(1, max_r + 1):
        for c in range(1, max_c + 1):
            for rows in _interval_rows(r, c):
                out.append(build_skew(r, c, rows))
    return out


def _interval_rows(r: int, c: int):
    def rec(rows):
        i = len(rows)
        if i == r:
            if rows[0][0] == 1 and max(b for _, b in rows) == c:
                covered = set()
                for a, b in rows:
                    covered.update(range(a, b + 1))
                if covered == set(range(1, c + 1)):
                    yield tuple(rows)
            return
        a_lo = rows[-1][0] if rows else 1
        for a in range(a_lo, c + 1):
            if rows and a > rows[-1][1] + 1:
                continue
            b_lo = max(a, rows[-1][1] if rows else 1)
            for b in range(b_lo, c + 1):
                rows.append((a, b))
                yield from rec(rows)
                rows.pop()

    yield from rec([])


def embedding_to_fractions(emb):
    return {v: (Fraction(x), Fraction(y)) for v, (x, y) in emb.items()}
