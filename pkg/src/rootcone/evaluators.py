"""Evaluators for the linear-extension rational function and the integer
point transform of a poset's root cone, by independent routes.

psi_oracle sums the defining permuted fractions over all linear extensions;
psi_general sums unimodular tree fractions over the bipartition pieces;
psi_planar / sigma_planar are the closed products over bounded regions of a
strongly planar drawing; psi_admissible / sigma_admissible extend those
products to regions with several minima and maxima; psi_skew_paths is the
lattice-path sum for skew diagrams; the reduction route extracts both
invariants from the rewriting engine.  Cross-checks between routes are the
package's reason to exist.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Polynomial,
    RatFrac,
    frac_combine,
    frac_equal,
    frac_mul_poly,
    frac_sum,
    rename_frac,
    substitute_with_cancellation,
    tree_psi_frac,
)
from .errors import NonForestTerm, NotAdmissible, NotANotch
from .graphs import LabeledGraph, undirected_adjacency
from .notches import Notch, close_notch_with_map, find_notches
from .planar import bounded_regions, regions_from_pairs, require_two_chains
from .posets import Poset, linear_extensions
from .skew import SkewDiagram, skew_to_poset, lattice_paths, x_label, y_label
from .subdivision import FormalSum, reduce_full, sigma_from_sum, psi_from_sum
from .triangulation import EdgeOrder, decompose_lr, ext_zero_triangulation


@dataclass(frozen=True)
class MethodReport:
    method: str
    result: RatFrac
    witness: dict


def psi_oracle_direct(p: Poset) -> RatFrac:
    """Defining sum over linear extensions of the permuted chain fraction,
    folded term by term."""
    exts = linear_extensions(p)
    if p.n == 1:
        return RatFrac.one(1)
    parts = [
        RatFrac.from_factors(p.n, [(w[k], w[k + 1]) for k in range(p.n - 1)])
        for w in exts
    ]
    return frac_sum(parts)


def psi_oracle(p: Poset) -> RatFrac:
    """Defining sum over linear extensions of the permuted chain fraction.

    Computed by distributing over shared listing prefixes: the sum over
    extensions starting v, rest factors as 1/(x_head - x_v) times the same
    sum for the remaining up-set, memoised on (remaining set, head).  The
    value is identical to the term-by-term fold (see psi_oracle_direct).
    """
    n = p.n
    if n == 1:
        return RatFrac.one(1)
    preds = [0] * (n + 1)
    for i, j in p.covers:
        preds[j] |= 1 << (i - 1)
    full = (1 << n) - 1
    memo: dict[tuple[int, int], RatFrac] = {}

    def minimals(mask: int):
        return [
            v
            for v in range(1, n + 1)
            if mask >> (v - 1) & 1 and not (preds[v] & mask)
        ]

    def tail_sum(mask: int, head: int) -> RatFrac:
        if mask == 0:
            return RatFrac.one(n)
        key = (mask, head)
        hit = memo.get(key)
        if hit is not None:
            return hit
        parts = []
        for v in minimals(mask):
            bridge = RatFrac.from_factors(n, [(head, v)])
            parts.append(frac_combine("mul", bridge, tail_sum(mask & ~(1 << (v - 1)), v)))
        out = frac_sum(parts)
        memo[key] = out
        return out

    parts = [tail_sum(full & ~(1 << (v - 1)), v) for v in minimals(full)]
    return frac_sum(parts)


def psi_oracle_report(p: Poset) -> MethodReport:
    exts = linear_extensions(p)
    return MethodReport("oracle", psi_oracle(p), {"extensions": len(exts)})


def psi_general(p: Poset) -> RatFrac:
    """Sum of tree fractions over the ext-zero triangulation of every piece."""
    parts = []
    for _, piece in decompose_lr(p):
        for t in ext_zero_triangulation(piece):
            parts.append(tree_psi_frac(t))
    if not parts:
        return RatFrac.zero(p.n)
    return frac_sum(parts)


def psi_general_report(p: Poset) -> MethodReport:
    pieces = decompose_lr(p)
    trees = [t for _, piece in pieces for t in ext_zero_triangulation(piece)]
    return MethodReport(
        "general", psi_general(p), {"pieces": len(pieces), "trees": len(trees)}
    )


def _resolve_regions(p: Poset, embedding, regions):
    if regions is not None:
        return regions_from_pairs(regions)
    if embedding is not None:
        return bounded_regions(p, embedding)
    raise ValueError("an embedding or explicit regions are required")


def psi_planar(p: Poset, embedding=None, regions=None) -> RatFrac:
    """Product formula for a strongly planar poset:
    prod over regions of (x_min - x_max) over prod over covers of (x_i - x_j)."""
    regs = _resolve_regions(p, embedding, regions)
    require_two_chains(regs)
    num = Polynomial.one(p.n)
    for r in regs:
        num = num * Polynomial.linear_difference(p.n, min(r.mins), max(r.maxs))
    return RatFrac.from_factors(p.n, p.covers, num=num)


def sigma_planar(p: Poset, embedding=None, regions=None) -> RatFrac:
    regs = _resolve_regions(p, embedding, regions)
    require_two_chains(regs)
    return _sigma_product(p, [(r.mins, r.maxs) for r in regs])


def _sigma_product(p: Poset, region_pairs) -> RatFrac:
    """Clear prod (1 - x^min/x^max) / prod (1 - x_i/x_j) to ordinary form.

    Each denominator factor inverts to x_j/(x_j - x_i) and each numerator
    factor to (x^max - x^min)/x^max; the region-max monomials always divide
    the cover-head monomial exactly.
    """
    n = p.n
    num = Polynomial.one(n)
    head_exps = [0] * n
    for _, j in p.covers:
        head_exps[j - 1] += 1
    for mins, maxs in region_pairs:
        lo = [0] * n
        hi = [0] * n
        for v in mins:
            lo[v - 1] += 1
        for v in maxs:
            hi[v - 1] += 1
            head_exps[v - 1] -= 1
        num = num * (
            Polynomial.monomial(n, tuple(hi)) - Polynomial.monomial(n, tuple(lo))
        )
    if any(e < 0 for e in head_exps):
        raise ValueError("region maxima exceed cover heads; certificate is invalid")
    num = num * Polynomial.monomial(n, tuple(head_exps))
    sign = -1 if len(p.covers) % 2 else 1
    return RatFrac.from_factors(p.n, p.covers, num=num, sign=sign)


def cycle_biconnected(p: Poset) -> bool:
    """True when every biconnected component of the Hasse graph with more
    than one edge is a single cycle."""
    g = p.hasse_graph()
    for verts, edges in _blocks(g):
        if len(edges) > 1 and len(edges) != len(verts):
            return False
    return True


def _blocks(g: LabeledGraph):
    """Biconnected components as (vertex set, edge list) pairs."""
    adj = undirected_adjacency(g)
    index = {}
    low = {}
    stack: list[tuple[int, int]] = []
    blocks = []
    counter = itertools.count()

    def dfs(v, parent):
        index[v] = low[v] = next(counter)
        for w in adj[v]:
            if w == parent:
                continue
            if w not in index:
                stack.append((v, w))
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (v, w):
                            break
                    verts = {x for e in block for x in e}
                    blocks.append((verts, block))
            elif index[w] < index[v]:
                stack.append((v, w))
                low[v] = min(low[v], index[w])

    for v in range(1, g.n + 1):
        if v not in index:
            dfs(v, 0)
    return blocks


def psi_admissible(p: Poset, embedding=None, regions=None, certified=False) -> RatFrac:
    """Region product with several minima/maxima per region:
    prod (sum of x over minima - sum of x over maxima) over prod of covers."""
    if not certified and not cycle_biconnected(p):
        raise NotAdmissible("a biconnected component of the Hasse graph is not a cycle")
    regs = _resolve_regions(p, embedding, regions)
    num = Polynomial.one(p.n)
    for r in regs:
        part = Polynomial.zero(p.n)
        for v in sorted(r.mins):
            part = part + Polynomial.variable(p.n, v)
        for v in sorted(r.maxs):
            part = part - Polynomial.variable(p.n, v)
        num = num * part
    return RatFrac.from_factors(p.n, p.covers, num=num)


def sigma_admissible(p: Poset, embedding=None, regions=None, certified=False) -> RatFrac:
    if not certified and not cycle_biconnected(p):
        raise NotAdmissible("a biconnected component of the Hasse graph is not a cycle")
    regs = _resolve_regions(p, embedding, regions)
    return _sigma_product(p, [(r.mins, r.maxs) for r in regs])


def psi_skew_paths(d: SkewDiagram) -> RatFrac:
    """Lattice-path sum for the bipartite poset of a skew diagram, rendered
    in the relabeled variables of skew_to_poset."""
    poset, _ = skew_to_poset(d)
    n = poset.n
    parts = []
    for path in lattice_paths(d):
        factors = [(x_label(d, i), y_label(d, j)) for i, j in path]
        parts.append(RatFrac.from_factors(n, factors))
    if not parts:
        # disconnected diagrams admit no monotone walk; the poset is then
        # disconnected too and its rational function vanishes
        return RatFrac.zero(n)
    return frac_sum(parts)


def hasse_sum(p: Poset, strategy: str = "lexmin", **kw) -> FormalSum:
    return reduce_full(p.hasse_graph(), strategy, **kw)


def psi_reduction(p: Poset, strategy: str = "lexmin") -> RatFrac:
    return psi_from_sum(hasse_sum(p, strategy))


def sigma_reduction(p: Poset, strategy: str = "lexmin") -> RatFrac:
    return sigma_from_sum(hasse_sum(p, strategy))


def check_notch_identity(p: Poset, t: Notch) -> bool:
    """Both closing identities at once.

    With m the kept label and M the dropped one, the V-shape identities are
      psi(closed) = (x_a - x_m) * psi(P)|_{x_M := x_m}
      sigma(closed) * x_m = (x_m - x_a) * sigma(P)|_{x_M := x_m}
    and the wedge shape swaps the roles of a and m.  Removable factors
    (x_m - x_M) are cancelled exactly before substituting.
    """
    if t.shape not in ("V", "A"):
        raise NotANotch(f"unknown shape {t.shape!r}")
    q, label = close_notch_with_map(p, t)
    keep, drop = sorted((t.b, t.c))
    m2, a2 = label[keep], label[t.a]
    n2 = q.n

    def push(f: RatFrac) -> RatFrac:
        cleared = substitute_with_cancellation(f, drop, keep)
        return rename_frac(cleared, label, n2)

    psi_q = psi_oracle(q)
    rhs = push(psi_oracle(p))
    if t.shape == "V":
        mult = Polynomial.linear_difference(n2, a2, m2)
    else:
        mult = Polynomial.linear_difference(n2, m2, a2)
    ok_psi = frac_equal(psi_q, frac_mul_poly(rhs, mult))

    sigma_q = sigma_reduction(q)
    rhs_s = push(sigma_reduction(p))
    if t.shape == "V":
        # sigma(closed) = (1 - x_a/x_m) * rhs_s
        lhs = frac_mul_poly(sigma_q, Polynomial.variable(n2, m2))
        rhs_s = frac_mul_poly(rhs_s, Polynomial.linear_difference(n2, m2, a2))
    else:
        # sigma(closed) = (1 - x_m/x_a) * rhs_s
        lhs = frac_mul_poly(sigma_q, Polynomial.variable(n2, a2))
        rhs_s = frac_mul_poly(rhs_s, Polynomial.linear_difference(n2, a2, m2))
    ok_sigma = frac_equal(lhs, rhs_s)
    return ok_psi and ok_sigma


# ---------------------------------------------------------------------------
# lattice point membership


class _ForestSolver:
    """Unique generator coordinates of a forest cone via cut sums.

    For an edge e = (i, j), removing e splits its component; the coefficient
    of e_i - e_j equals the sum of the point over i's side.  A point lies in
    the span iff it sums to zero over every component.
    """

    def __init__(self, g: LabeledGraph):
        adj = undirected_adjacency(g)
        seen = set()
        self.components: list[list[int]] = []
        for v in range(1, g.n + 1):
            if v in seen:
                continue
            comp = [v]
            seen.add(v)
            stack = [v]
            while stack:
                x = stack.pop()
                for w in adj[x]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            self.components.append(sorted(comp))
        self.sides = [self._side(adj, i, j) for i, j in g.edges]

    @staticmethod
    def _side(adj, i, j):
        side = {i}
        stack = [i]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if x == i and w == j:
                    continue
                if w not in side:
                    side.add(w)
                    stack.append(w)
        return sorted(side)

    def coordinates(self, point):
        """Edge coefficients, or None when the point is outside the span."""
        for comp in self.components:
            if sum(point[v - 1] for v in comp) != 0:
                return None
        return [sum(point[v - 1] for v in side) for side in self.sides]

    def member(self, point) -> bool:
        coords = self.coordinates(point)
        return coords is not None and all(c >= 0 for c in coords)


@lru_cache(maxsize=None)
def _forest_solver(g: LabeledGraph) -> _ForestSolver:
    return _ForestSolver(g)


@lru_cache(maxsize=None)
def _maximal_forests(g: LabeledGraph) -> tuple[LabeledGraph, ...]:
    """Spanning forests: one spanning tree choice per connected component."""
    adj = undirected_adjacency(g)
    seen = set()
    comp_trees = []
    for v in range(1, g.n + 1):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comp_edges = [e for e in g.distinct_edges if e[0] in comp]
        k = len(comp) - 1
        trees = []
        for subset in itertools.combinations(comp_edges, k):
            t = LabeledGraph(g.n, tuple(sorted(subset)))
            if t.is_forest():
                trees.append(subset)
        comp_trees.append(trees)
    out = []
    for combo in itertools.product(*comp_trees):
        edges = tuple(sorted(e for part in combo for e in part))
        out.append(LabeledGraph(g.n, edges))
    return tuple(out)


def cone_member(g: LabeledGraph, point) -> bool:
    """Membership in the root cone of g, decided independently of any
    dissection: search the linearly independent generator subsets (it is
    enough to search the maximal ones) for a nonnegative representation."""
    for forest in _maximal_forests(g):
        if _forest_solver(forest).member(point):
            return True
    return False


def _signed_points(n: int, bound: int):
    """Integer vectors with entries in [-bound, bound] and coordinate sum 0."""

    def rec(prefix, total):
        k = len(prefix)
        if k == n - 1:
            last = -total
            if -bound <= last <= bound:
                yield tuple(prefix + [last])
            return
        remaining = n - 1 - k
        for v in range(-bound, bound + 1):
            t = total + v
            if abs(t) <= bound * remaining:
                yield from rec(prefix + [v], t)

    yield from rec([], 0)


def lattice_point_check(p: Poset, bound: int, s: FormalSum | None = None) -> bool:
    """Signed incidence of the terminated sum must be the indicator of the
    root cone at every small integer point with coordinate sum zero."""
    if s is None:
        s = hasse_sum(p)
    g = p.hasse_graph()
    solvers = []
    for t in s.terms:
        if not t.graph.is_forest():
            raise NonForestTerm(f"cyclic terminal graph {t.graph.edges}")
        solvers.append((t.coeff * (-1) ** t.beta_pow, _forest_solver(t.graph)))
    for point in _signed_points(p.n, bound):
        signed = sum(c for c, solver in solvers if solver.member(point))
        expected = 1 if cone_member(g, point) else 0
        if signed != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# cross-method harness


def psi_reports(p: Poset, embedding=None, regions=None, skew: SkewDiagram | None = None):
    """Every applicable route to the rational function, with witnesses."""
    reports = [psi_oracle_report(p), psi_general_report(p)]
    try:
        s = hasse_sum(p)
        reports.append(
            MethodReport("reduction", psi_from_sum(s), {"terms": len(s.terms)})
        )
    except NonForestTerm:
        pass
    if embedding is not None or regions is not None:
        regs = _resolve_regions(p, embedding, regions)
        try:
            require_two_chains(regs)
            reports.append(
                MethodReport(
                    "planar",
                    psi_planar(p, regions=regs),
                    {"regions": [(sorted(r.mins), sorted(r.maxs)) for r in regs]},
                )
            )
        except Exception:
            pass
        if cycle_biconnected(p):
            reports.append(
                MethodReport(
                    "admissible",
                    psi_admissible(p, regions=regs),
                    {"regions": [(sorted(r.mins), sorted(r.maxs)) for r in regs]},
                )
            )
    if skew is not None:
        paths = lattice_paths(skew)
        reports.append(
            MethodReport("bflr", psi_skew_paths(skew), {"paths": len(paths)})
        )
    return reports


def sigma_reports(p: Poset, embedding=None, regions=None):
    reports = []
    try:
        s = hasse_sum(p)
        reports.append(
            MethodReport("reduction", sigma_from_sum(s), {"terms": len(s.terms)})
        )
    except NonForestTerm:
        pass
    if embedding is not None or regions is not None:
        regs = _resolve_regions(p, embedding, regions)
        try:
            require_two_chains(regs)
            reports.append(MethodReport("planar", sigma_planar(p, regions=regs), {}))
        except Exception:
            pass
        if cycle_biconnected(p):
            reports.append(
                MethodReport("admissible", sigma_admissible(p, regions=regs), {})
            )
    return reports


def agreement_matrix(reports):
    """Pairwise frac_equal over the reports; square boolean matrix."""
    k = len(reports)
    return [
        [frac_equal(reports[i].result, reports[j].result) for j in range(k)]
        for i in range(k)
    ]
