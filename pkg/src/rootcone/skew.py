"""Skew diagrams, their bipartite posets, and lattice-path enumeration.

Rows are numbered top to bottom 1..r and columns right to left 1..c, so the
northeasternmost cell is (1, 1) and the southwesternmost is (r, c).  Row i
occupies the column interval [a_i, b_i].
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyDiagram
from .posets import Poset, build_poset

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewDiagram:
    r: int
    c: int
    rows: tuple[tuple[int, int], ...]

    def cells(self) -> set[Cell]:
        return {(i, j) for i, (a, b) in enumerate(self.rows, 1) for j in range(a, b + 1)}

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        if not (1 <= i <= self.r):
            return False
        a, b = self.rows[i - 1]
        return a <= j <= b


def build_skew(r: int, c: int, rows) -> SkewDiagram:
    """Validate interval monotonicity and full column coverage."""
    if r < 1 or c < 1:
        raise EmptyDiagram(f"diagram with r={r}, c={c}")
    rows = tuple((int(a), int(b)) for a, b in rows)
    if len(rows) != r:
        raise ValueError(f"expected {r} row intervals, got {len(rows)}")
    for a, b in rows:
        if not (1 <= a <= b <= c):
            raise ValueError(f"row interval [{a}, {b}] invalid for c={c}")
    avals = [a for a, _ in rows]
    bvals = [b for _, b in rows]
    if avals != sorted(avals) or bvals != sorted(bvals):
        raise ValueError("row intervals must be nondecreasing in both endpoints")
    covered = set()
    for a, b in rows:
        covered.update(range(a, b + 1))
    if covered != set(range(1, c + 1)):
        raise ValueError("row intervals must cover every column")
    return SkewDiagram(r, c, rows)


def x_label(d: SkewDiagram, i: int) -> int:
    """Row vertex x_i gets label r - i + 1 (so x_r, ..., x_1 are labels 1..r)."""
    return d.r - i + 1


def y_label(d: SkewDiagram, j: int) -> int:
    """Column vertex y_j gets label r + j."""
    return d.r + j


def skew_to_poset(d: SkewDiagram) -> tuple[Poset, tuple[int, ...]]:
    """Bipartite poset of the diagram plus the left-to-right drawing order.

    The drawing order x_r, ..., x_1, y_1, ..., y_c is exactly the label
    order 1..r+c under the relabeling above.
    """
    covers = []
    for i in range(1, d.r + 1):
        a, b = d.rows[i - 1]
        for j in range(a, b + 1):
            covers.append((x_label(d, i), y_label(d, j)))
    poset = build_poset(d.r + d.c, covers)
    return poset, tuple(range(1, d.r + d.c + 1))


def lattice_paths(d: SkewDiagram) -> list[tuple[Cell, ...]]:
    """All cell paths from (1, 1) to (r, c) inside d with unit south/west steps."""
    if d.r < 1 or d.c < 1:
        raise EmptyDiagram("no cells to walk")
    target = (d.r, d.c)
    out: list[tuple[Cell, ...]] = []

    def rec(path: list[Cell]):
        cell = path[-1]
        if cell == target:
            out.append(tuple(path))
            return
        i, j = cell
        for step in ((i + 1, j), (i, j + 1)):
            if step in d:
                path.append(step)
                rec(path)
                path.pop()

    rec([(1, 1)])
    out.sort()
    return out
