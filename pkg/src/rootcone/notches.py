"""Notches of a poset and the quotient that closes them.

A V-notch (a, b, c) has b and c covering a with b, c in different connected
components of the poset minus the principal down-set of a; a wedge-notch
(shape "A") is the dual.  Closing a notch merges b and c, leaving one fewer
element and one fewer cover.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotANotch
from .posets import (
    Poset,
    build_poset,
    comparability_components,
    down_set,
    linear_extensions,
    strict_pairs,
    up_set,
)


@dataclass(frozen=True)
class Notch:
    a: int
    b: int
    c: int
    shape: str  # "V" or "A"

    def __post_init__(self):
        if self.shape not in ("V", "A"):
            raise ValueError(f"shape must be 'V' or 'A', got {self.shape!r}")


def find_notches(p: Poset) -> list[Notch]:
    """All notches, V-shaped then A-shaped, each sorted by (a, b, c)."""
    uppers: dict[int, list[int]] = {v: [] for v in range(1, p.n + 1)}
    lowers: dict[int, list[int]] = {v: [] for v in range(1, p.n + 1)}
    for i, j in p.covers:
        uppers[i].append(j)
        lowers[j].append(i)

    def comp_of(components, v):
        for k, comp in enumerate(components):
            if v in comp:
                return k
        raise AssertionError(f"{v} missing from component list")

    out = []
    for a in range(1, p.n + 1):
        ups = sorted(uppers[a])
        if len(ups) >= 2:
            rest = set(range(1, p.n + 1)) - down_set(p, a)
            comps = comparability_components(p, rest)
            for x in range(len(ups)):
                for y in range(x + 1, len(ups)):
                    b, c = ups[x], ups[y]
                    if comp_of(comps, b) != comp_of(comps, c):
                        out.append(Notch(a, b, c, "V"))
        downs = sorted(lowers[a])
        if len(downs) >= 2:
            rest = set(range(1, p.n + 1)) - up_set(p, a)
            comps = comparability_components(p, rest)
            for x in range(len(downs)):
                for y in range(x + 1, len(downs)):
                    b, c = downs[x], downs[y]
                    if comp_of(comps, b) != comp_of(comps, c):
                        out.append(Notch(a, b, c, "A"))
    out.sort(key=lambda t: (t.shape != "V", t.a, t.b, t.c))
    return out


def _normalise(t: Notch) -> Notch:
    b, c = sorted((t.b, t.c))
    return Notch(t.a, b, c, t.shape)


def close_notch_with_map(p: Poset, t: Notch) -> tuple[Poset, dict[int, int]]:
    """Quotient identifying b and c, plus the old-label -> new-label map.

    The merged element keeps min(b, c).  Surviving elements are relabeled by
    the lexicographically smallest linear extension of the quotient, which
    restores natural labeling.
    """
    if _normalise(t) not in {_normalise(s) for s in find_notches(p)}:
        raise NotANotch(f"{t} is not a notch of this poset")
    keep, drop = sorted((t.b, t.c))

    def phi(v):
        return keep if v == drop else v

    base = {(phi(x), phi(y)) for x, y in strict_pairs(p) if phi(x) != phi(y)}
    survivors = [v for v in range(1, p.n + 1) if v != drop]
    # close transitively: compositions through the merged element are new
    succ: dict[int, set[int]] = {v: set() for v in survivors}
    for x, y in base:
        succ[x].add(y)
    rel = set()
    for v in survivors:
        seen: set[int] = set()
        stack = list(succ[v])
        while stack:
            w = stack.pop()
            if w not in seen:
                seen.add(w)
                stack.extend(succ[w])
        if v in seen:
            raise NotANotch("closing this triple creates a cycle")
        rel.update((v, w) for w in seen)
    covers = []
    for x, y in rel:
        if not any((x, z) in rel and (z, y) in rel for z in survivors):
            covers.append((x, y))

    # relabel by the lex-smallest linear extension of the quotient
    tmp_map = {v: k + 1 for k, v in enumerate(survivors)}
    tmp = build_poset_from_relation(len(survivors), {(tmp_map[x], tmp_map[y]) for x, y in covers})
    ext = linear_extensions(tmp)[0]
    rank = {v: k + 1 for k, v in enumerate(ext)}
    label = {old: rank[tmp_map[old]] for old in survivors}
    new_covers = sorted((label[x], label[y]) for x, y in covers)
    q = build_poset(len(survivors), new_covers)
    assert q.n == p.n - 1
    assert len(q.covers) == len(p.covers) - 1
    return q, label


def build_poset_from_relation(n: int, covers) -> Poset:
    """Covers already irredundant but possibly non-naturally labeled.

    Used only as a scratch object to compute a linear extension for
    relabeling, so validation is skipped.
    """
    return Poset(n, tuple(sorted(covers)))


def close_notch(p: Poset, t: Notch) -> Poset:
    q, _ = close_notch_with_map(p, t)
    return q
