"""The graph rewriting engine that dissects a root cone into simplicial cones.

A pivot is a pair of edges (i, j), (j, k) with i < j < k.  One step replaces
the host graph by three children: drop (j, k), drop (i, j), or drop both,
in every case adding (i, k); the third child carries an extra beta power.
Children are re-goodified after every step, and each edge dropped that way
is appended to the branch's prefactor ledger.

Pivots are only ever taken on a common cycle: a pivot inside a tree part
would recreate edges whose later removal corrupts the prefactor ledger, and
it refines cones that are already simplicial.  Under the default
"simplicial" termination a term is therefore terminal once its graph is a
forest (or a cyclic graph with no cycle pivot, which no rewriting can
dissect); the finer "alternating" termination keeps splitting simplicial
cones until no pivot of any kind remains.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .algebra import RatFrac, frac_combine, frac_sum, ipt_frac, tree_psi_frac
from .errors import (
    NonForestTerm,
    NotGoodGraph,
    PivotAbsent,
    StrategyDiverged,
)
from .graphs import Edge, LabeledGraph, goodify
from .planar import bounded_regions, regions_from_pairs, require_two_chains
from .posets import Poset

Pivot = tuple[Edge, Edge]


@dataclass(frozen=True)
class GraphTerm:
    graph: LabeledGraph
    beta_pow: int
    coeff: int
    prefactor: tuple[Edge, ...]


@dataclass(frozen=True)
class FormalSum:
    terms: tuple[GraphTerm, ...]


def make_formal_sum(terms) -> FormalSum:
    """Canonical order plus merging of identical (graph, beta, prefactor) keys."""
    acc: dict[tuple, int] = {}
    for t in terms:
        key = (t.beta_pow, t.graph.edges, t.prefactor, t.graph.n)
        acc[key] = acc.get(key, 0) + t.coeff
    out = [
        GraphTerm(LabeledGraph(n, edges), beta, coeff, pref)
        for (beta, edges, pref, n), coeff in sorted(acc.items())
        if coeff
    ]
    return FormalSum(tuple(out))


def pivots(g: LabeledGraph) -> list[Pivot]:
    """All edge pairs (i, j), (j, k), sorted by (j, i, k)."""
    edges = g.distinct_edges
    by_tail: dict[int, list[int]] = {}
    for i, j in edges:
        by_tail.setdefault(i, []).append(j)
    found = []
    for i, j in edges:
        for k in by_tail.get(j, ()):
            found.append(((i, j), (j, k)))
    found.sort(key=lambda pv: (pv[0][1], pv[0][0], pv[1][1]))
    return found


def reduce_step(t: GraphTerm, pivot: Pivot) -> list[GraphTerm]:
    """Apply one rewriting step at the given pivot; no goodification here."""
    (i, j), (j2, k) = pivot
    if j != j2 or not (i < j < k):
        raise PivotAbsent(f"{pivot} is not of the form (i,j),(j,k) with i<j<k")
    edges = list(t.graph.edges)
    for e in ((i, j), (j, k)):
        if e not in edges:
            raise PivotAbsent(f"edge {e} absent from the term")

    def without(*drop: Edge) -> LabeledGraph:
        es = list(edges)
        for e in drop:
            es.remove(e)
        es.append((i, k))
        return LabeledGraph(t.graph.n, tuple(sorted(es)))

    return [
        replace(t, graph=without((j, k))),
        replace(t, graph=without((i, j))),
        replace(t, graph=without((i, j), (j, k)), beta_pow=t.beta_pow + 1),
    ]


def _on_common_cycle(g: LabeledGraph, pivot: Pivot) -> bool:
    """Both pivot edges lie on a simple cycle iff the outer endpoints stay
    connected after deleting the shared middle vertex."""
    (i, j), (_, k) = pivot
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for a, b in g.distinct_edges:
        if a != j and b != j:
            adj[a].append(b)
            adj[b].append(a)
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        if v == k:
            return True
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def _cycle_pivots(g: LabeledGraph, pv: list[Pivot]) -> list[Pivot]:
    return [p for p in pv if _on_common_cycle(g, p)]


def _pick_lexmin(pool, rng):
    return pool[0]


def _pick_lexmax(pool, rng):
    return pool[-1]


def _pick_random(pool, rng):
    return pool[rng.randrange(len(pool))]


STRATEGIES = {
    "lexmin": _pick_lexmin,
    "lexmax": _pick_lexmax,
    "random": _pick_random,
}

TERMINATIONS = ("simplicial", "alternating")


def reduce_full(
    g: LabeledGraph,
    strategy: str = "lexmin",
    *,
    termination: str = "simplicial",
    max_steps: int = 10**6,
    seed: int = 0,
) -> FormalSum:
    """Rewrite a good graph until every term is terminal.

    Every step strictly decreases sum(n*i - j) over the edges, so all
    strategies terminate; the iteration cap is a guard, not a crutch.
    """
    simple, removed = goodify(g)
    if removed or simple.edges != g.distinct_edges or not g.is_simple():
        raise NotGoodGraph("input graph must be good (no dominated or parallel edges)")
    if termination not in TERMINATIONS:
        raise ValueError(f"unknown termination {termination!r}")
    pick = STRATEGIES[strategy]
    rng = random.Random(seed)
    stack = [GraphTerm(g, 0, 1, ())]
    terminal = []
    steps = 0
    while stack:
        term = stack.pop()
        pv = pivots(term.graph)
        pool = _cycle_pivots(term.graph, pv)
        if not pool and termination == "alternating":
            pool = pv
        if not pool:
            terminal.append(term)
            continue
        steps += 1
        if steps > max_steps:
            raise StrategyDiverged(f"no termination within {max_steps} steps")
        for child in reduce_step(term, pick(pool, rng)):
            g2, dropped = goodify(child.graph)
            stack.append(
                replace(
                    child,
                    graph=g2,
                    prefactor=tuple(sorted(child.prefactor + dropped)),
                )
            )
    return make_formal_sum(terminal)


def sigma_from_sum(s: FormalSum) -> RatFrac:
    """Integer point transform of the dissected cone: beta := -1 and each
    edge variable becomes 1/(1 - x_i/x_j).  Prefactors stay out: removing a
    dominated edge never changes the cone."""
    parts = []
    for t in s.terms:
        if not t.graph.is_forest():
            raise NonForestTerm(f"cyclic terminal graph {t.graph.edges}")
        f = ipt_frac(t.graph)
        coeff = t.coeff * (-1) ** t.beta_pow
        if coeff != 1:
            f = RatFrac(f.nvars, f.num * abs(coeff), f.den, f.sign * (1 if coeff > 0 else -1))
        parts.append(f)
    return frac_sum(parts)


def psi_from_sum(s: FormalSum) -> RatFrac:
    """Valuation specialisation: beta := 0 keeps only the top-dimensional
    terms, with each edge variable becoming 1/(x_i - x_j)."""
    parts = []
    for t in s.terms:
        if t.beta_pow:
            continue
        if not t.graph.is_forest():
            raise NonForestTerm(f"cyclic terminal graph {t.graph.edges}")
        f = tree_psi_frac(t.graph)
        if t.coeff != 1:
            f = RatFrac(f.nvars, f.num * t.coeff, f.den, f.sign)
        parts.append(f)
    if not parts:
        return RatFrac.zero(s.terms[0].graph.n if s.terms else 1)
    return frac_sum(parts)


def verify_planar_identity(
    p: Poset,
    s: FormalSum,
    *,
    embedding=None,
    regions=None,
) -> bool:
    """Check the subdivision ledger of a strongly planar poset.

    True iff every branch prefactor equals the multiset of (min, max) pairs
    of the bounded regions, every beta^0 term is a spanning tree, and every
    beta^k term is a forest with n - 1 - k edges.
    """
    if regions is not None:
        regs = regions_from_pairs(regions)
    elif embedding is not None:
        regs = bounded_regions(p, embedding)
    else:
        raise ValueError("an embedding or explicit regions are required")
    require_two_chains(regs)
    expected = tuple(sorted((min(r.mins), max(r.maxs)) for r in regs))
    n = p.n
    for t in s.terms:
        if t.prefactor != expected:
            return False
        if not t.graph.is_forest():
            return False
        if len(t.graph.edges) != n - 1 - t.beta_pow:
            return False
        if t.beta_pow == 0 and not t.graph.is_connected():
            return False
    return True


def format_formal_sum(s: FormalSum) -> list[str]:
    """One line per term: `coeff beta^k [prefactor: i-j,...] edges: i-j,...`."""
    lines = []
    for t in s.terms:
        pref = ",".join(f"{i}-{j}" for i, j in t.prefactor) or "-"
        edges = ",".join(f"{i}-{j}" for i, j in t.graph.edges)
        lines.append(f"{t.coeff} beta^{t.beta_pow} [prefactor: {pref}] edges: {edges}")
    return lines
