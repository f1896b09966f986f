"""Exact straight-line upward drawings and bounded-region extraction.

Coordinates are rational and every geometric predicate is exact: there is no
floating point anywhere in this module.  Faces are traced from the angular
rotation system of the drawing; the bounded ones are those whose boundary
walk encloses positive signed area.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import EdgesCross, NotUpward, RegionNotTwoChains
from .posets import Poset

Point = tuple[Fraction, Fraction]
Embedding = dict[int, Point]


@dataclass(frozen=True)
class Region:
    mins: frozenset[int]
    maxs: frozenset[int]
    boundary: tuple[int, ...]

    def sort_key(self):
        return (sorted(self.mins), sorted(self.maxs), self.boundary)


def make_embedding(coords) -> Embedding:
    return {int(v): (Fraction(x), Fraction(y)) for v, (x, y) in coords.items()}


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """p collinear with a-b and strictly inside the segment."""
    if _cross(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
        and p != a
        and p != b
    )


def _segments_conflict(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when segments a-b and c-d meet anywhere except a shared endpoint."""
    shared = {a, b} & {c, d}
    if shared:
        # touching at the shared endpoint is fine; any second contact is not
        others = [p for p in (c, d) if p not in {a, b}]
        return any(_on_segment(p, a, b) for p in others) or any(
            _on_segment(p, c, d) for p in (a, b) if p not in {c, d}
        )
    d1 = _cross(a, b, c)
    d2 = _cross(a, b, d)
    d3 = _cross(c, d, a)
    d4 = _cross(c, d, b)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return True
    return (
        _on_segment(c, a, b)
        or _on_segment(d, a, b)
        or _on_segment(a, c, d)
        or _on_segment(b, c, d)
        or (d1 == 0 and d2 == 0 and _collinear_overlap(a, b, c, d))
    )


def _collinear_overlap(a, b, c, d) -> bool:
    def key(p):
        return p
    lo1, hi1 = sorted((a, b), key=key)
    lo2, hi2 = sorted((c, d), key=key)
    return max(lo1, lo2) < min(hi1, hi2)


def validate_embedding(p: Poset, emb: Embedding) -> None:
    for v in range(1, p.n + 1):
        if v not in emb:
            raise ValueError(f"no coordinates for element {v}")
    pts = [emb[v] for v in range(1, p.n + 1)]
    if len(set(pts)) != p.n:
        raise EdgesCross("two elements share a point")
    for i, j in p.covers:
        if not emb[i][1] < emb[j][1]:
            raise NotUpward(f"cover ({i}, {j}) does not point upward")
    covers = list(p.covers)
    for k, (i, j) in enumerate(covers):
        for i2, j2 in covers[k + 1 :]:
            if _segments_conflict(emb[i], emb[j], emb[i2], emb[j2]):
                raise EdgesCross(f"edges ({i},{j}) and ({i2},{j2}) intersect")
    # a vertex may not sit in the interior of any edge
    for v in range(1, p.n + 1):
        for i, j in covers:
            if v not in (i, j) and _on_segment(emb[v], emb[i], emb[j]):
                raise EdgesCross(f"element {v} lies on edge ({i},{j})")


def _rotation(p: Poset, emb: Embedding) -> dict[int, list[int]]:
    """Neighbours of each vertex sorted counterclockwise from the +x axis."""
    nbrs: dict[int, list[int]] = {v: [] for v in range(1, p.n + 1)}
    for i, j in p.covers:
        nbrs[i].append(j)
        nbrs[j].append(i)

    def order_around(v):
        ox, oy = emb[v]

        def half(w):
            dx, dy = emb[w][0] - ox, emb[w][1] - oy
            return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

        def cmp(w1, w2):
            h1, h2 = half(w1), half(w2)
            if h1 != h2:
                return -1 if h1 < h2 else 1
            c = _cross(emb[v], emb[w1], emb[w2])
            if c == 0:
                return 0
            return -1 if c > 0 else 1

        return sorted(nbrs[v], key=functools.cmp_to_key(cmp))

    return {v: order_around(v) for v in range(1, p.n + 1)}


def _trace_faces(p: Poset, emb: Embedding):
    """Orbit decomposition of darts under the next-dart map.

    From dart (u, v) the walk continues to (v, w) where w follows u in the
    counterclockwise rotation at v; bounded faces then close up with
    positive signed area.
    """
    rot = _rotation(p, emb)
    darts = set()
    for i, j in p.covers:
        darts.add((i, j))
        darts.add((j, i))
    faces = []
    left = set(darts)
    while left:
        start = min(left)
        walk = []
        d = start
        while True:
            walk.append(d)
            left.discard(d)
            u, v = d
            lst = rot[v]
            w = lst[(lst.index(u) + 1) % len(lst)]
            d = (v, w)
            if d == start:
                break
        faces.append(walk)
    return faces


def _walk_area2(emb: Embedding, walk) -> Fraction:
    total = Fraction(0)
    for u, v in walk:
        (xu, yu), (xv, yv) = emb[u], emb[v]
        total += xu * yv - xv * yu
    return total


def bounded_regions(p: Poset, emb: Embedding) -> list[Region]:
    """Bounded faces of the drawing of the Hasse diagram, with min/max sets.

    A boundary vertex is a local minimum when both incident walk edges point
    away from it (and dually for maxima); edge direction is label order.
    Euler's relation V - E + F = 2 is asserted on each connected component.
    """
    emb = make_embedding(emb)
    validate_embedding(p, emb)
    faces = _trace_faces(p, emb)

    comp = _component_ids(p)
    counts: dict[int, int] = {}
    for walk in faces:
        counts[comp[walk[0][0]]] = counts.get(comp[walk[0][0]], 0) + 1
    for cid in set(comp.values()):
        verts = [v for v in comp if comp[v] == cid]
        nedges = sum(1 for e in p.covers if comp[e[0]] == cid)
        nfaces = counts.get(cid, 1 if len(verts) == 1 else 0)
        if len(verts) - nedges + nfaces != 2:
            raise RuntimeError("face tracing violated Euler's relation")

    regions = []
    for walk in faces:
        # the next-dart rule traces bounded faces clockwise, so they close
        # with negative signed area; the outer face is the positive one
        if _walk_area2(emb, walk) >= 0:
            continue
        boundary = tuple(u for u, _ in walk)
        mins, maxs = set(), set()
        k = len(boundary)
        for t in range(k):
            prev_v = boundary[(t - 1) % k]
            v = boundary[t]
            next_v = boundary[(t + 1) % k]
            if v < prev_v and v < next_v:
                mins.add(v)
            if v > prev_v and v > next_v:
                maxs.add(v)
        regions.append(Region(frozenset(mins), frozenset(maxs), boundary))
    regions.sort(key=Region.sort_key)
    return regions


def _component_ids(p: Poset) -> dict[int, int]:
    parent = list(range(p.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in p.covers:
        parent[find(i)] = find(j)
    return {v: find(v) for v in range(1, p.n + 1)}


def regions_from_pairs(pairs) -> list[Region]:
    """Explicit region certificates: Region objects or (min set, max set) pairs."""
    out = []
    for item in pairs:
        if isinstance(item, Region):
            out.append(item)
        else:
            mins, maxs = item
            out.append(Region(frozenset(mins), frozenset(maxs), ()))
    out.sort(key=Region.sort_key)
    return out


def require_two_chains(regions) -> None:
    """Strongly planar consumers need every region to have one min and one max."""
    for r in regions:
        if len(r.mins) != 1 or len(r.maxs) != 1:
            raise RegionNotTwoChains(
                f"region with minima {sorted(r.mins)} and maxima {sorted(r.maxs)}"
            )
