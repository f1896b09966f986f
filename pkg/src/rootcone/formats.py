"""Line-oriented UTF-8 text formats for posets and skew diagrams.

Poset files:

    poset
    n 4
    covers
    1 2
    ...
    embedding          # optional: `v x y` with exact rationals
    1 0 0
    regions            # optional: explicit certificates
    min: 1 max: 4

Skew files:

    skew
    rows 2 2
    1 2
    1 2

Serialisation is canonical (sorted covers, `p/q` rationals), so canonical
files round-trip byte for byte.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, RootconeError
from .planar import Region
from .posets import Poset, build_poset
from .skew import SkewDiagram, build_skew


@dataclass
class PosetInput:
    poset: Poset
    embedding: dict | None
    regions: list[Region] | None


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield k, line


def parse_input(text: str):
    """Dispatch on the header line; returns PosetInput or SkewDiagram."""
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty file")
    header = rows[0][1]
    if header == "poset":
        return _parse_poset(rows[1:])
    if header == "skew":
        return _parse_skew(rows[1:])
    raise ParseError(f"unknown header {header!r} (expected 'poset' or 'skew')")


def _parse_poset(rows) -> PosetInput:
    n = None
    covers: list[tuple[int, int]] = []
    embedding: dict | None = None
    regions: list[Region] | None = None
    section = None
    for lineno, line in rows:
        words = line.split()
        if words[0] == "n" and len(words) == 2 and section is None:
            n = int(words[1])
            continue
        if line in ("covers", "embedding", "regions"):
            section = line
            if section == "embedding":
                embedding = {}
            if section == "regions":
                regions = []
            continue
        if section == "covers":
            if len(words) != 2:
                raise ParseError(f"line {lineno}: expected `i j`")
            covers.append((int(words[0]), int(words[1])))
        elif section == "embedding":
            if len(words) != 3:
                raise ParseError(f"line {lineno}: expected `v x y`")
            try:
                embedding[int(words[0])] = (Fraction(words[1]), Fraction(words[2]))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"line {lineno}: bad rational ({exc})") from exc
        elif section == "regions":
            regions.append(_parse_region(lineno, line))
        else:
            raise ParseError(f"line {lineno}: content outside any section")
    if n is None:
        raise ParseError("missing `n <int>` line")
    try:
        poset = build_poset(n, covers)
    except (RootconeError, ValueError) as exc:
        raise type(exc)(str(exc)) from None
    return PosetInput(poset, embedding, regions)


def _parse_region(lineno: int, line: str) -> Region:
    try:
        head, tail = line.split("max:")
        mins_text = head.split("min:")[1]
        mins = frozenset(int(w) for w in mins_text.replace(",", " ").split())
        maxs = frozenset(int(w) for w in tail.replace(",", " ").split())
        return Region(mins, maxs, ())
    except (IndexError, ValueError) as exc:
        raise ParseError(f"line {lineno}: expected `min: i[,i...] max: j[,j...]`") from exc


def _parse_skew(rows) -> SkewDiagram:
    if not rows or not rows[0][1].startswith("rows"):
        raise ParseError("skew file must start with `rows <r> <c>`")
    words = rows[0][1].split()
    if len(words) != 3:
        raise ParseError("expected `rows <r> <c>`")
    r, c = int(words[1]), int(words[2])
    intervals = []
    for lineno, line in rows[1:]:
        words = line.split()
        if len(words) != 2:
            raise ParseError(f"line {lineno}: expected `a_i b_i`")
        intervals.append((int(words[0]), int(words[1])))
    return build_skew(r, c, intervals)


def serialize_poset(p: Poset, embedding=None, regions=None) -> str:
    out = ["poset", f"n {p.n}", "covers"]
    out.extend(f"{i} {j}" for i, j in sorted(p.covers))
    if embedding:
        out.append("embedding")
        for v in sorted(embedding):
            x, y = embedding[v]
            out.append(f"{v} {Fraction(x)} {Fraction(y)}")
    if regions:
        out.append("regions")
        for r in sorted(regions, key=Region.sort_key):
            mins = ",".join(str(v) for v in sorted(r.mins))
            maxs = ",".join(str(v) for v in sorted(r.maxs))
            out.append(f"min: {mins} max: {maxs}")
    return "\n".join(out) + "\n"


def serialize_skew(d: SkewDiagram) -> str:
    out = ["skew", f"rows {d.r} {d.c}"]
    out.extend(f"{a} {b}" for a, b in d.rows)
    return "\n".join(out) + "\n"
