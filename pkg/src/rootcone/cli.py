"""Command-line front end.

Subcommands: psi, sigma, triangulate, reduce, paths, notch, verify, corpus,
export-dot.  Canonical results go to stdout, diagnostics to stderr; the exit
code is 0 on success/agreement, 1 on mathematical disagreement, 2 on input
errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus as corpus_mod
from .algebra import canonical_text, evaluate_frac
from .errors import RootconeError
from .evaluators import (
    agreement_matrix,
    psi_admissible,
    psi_general,
    psi_oracle,
    psi_planar,
    psi_reduction,
    psi_reports,
    psi_skew_paths,
    sigma_admissible,
    sigma_planar,
    sigma_reduction,
    sigma_reports,
)
from .formats import PosetInput, parse_input, serialize_poset
from .notches import find_notches
from .posets import Poset
from .skew import SkewDiagram, skew_to_poset, lattice_paths
from .subdivision import (
    format_formal_sum,
    psi_from_sum,
    reduce_full,
    sigma_from_sum,
)
from .triangulation import (
    EdgeOrder,
    decompose_lr,
    ext_zero_triangulation,
    noncrossing_alternating_trees,
)


def _read(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise RootconeError(f"cannot read {path}: {exc}") from exc
    return parse_input(text)


def _as_poset(data) -> tuple[Poset, dict | None, list | None, SkewDiagram | None]:
    if isinstance(data, PosetInput):
        return data.poset, data.embedding, data.regions, None
    poset, _ = skew_to_poset(data)
    return poset, None, None, data


def _parse_at(text: str, n: int):
    values = [Fraction(w) for w in text.split(",")]
    if len(values) != n:
        raise RootconeError(f"--at needs {n} comma-separated rationals")
    return tuple(values)


def _parse_order(text: str) -> EdgeOrder:
    edges = []
    for part in text.split(","):
        a, b = part.split("-")
        edges.append((int(a), int(b)))
    return EdgeOrder(edges)


def _emit(frac, at: str | None, n: int):
    if at:
        print(evaluate_frac(frac, _parse_at(at, n)))
    else:
        print(canonical_text(frac))


def _cmd_psi(args) -> int:
    poset, embedding, regions, skew = _as_poset(_read(args.input))
    method = args.method
    if method == "oracle":
        frac = psi_oracle(poset)
    elif method == "general":
        frac = psi_general(poset)
    elif method == "reduction":
        frac = psi_reduction(poset, args.strategy)
    elif method == "planar":
        frac = psi_planar(poset, embedding=embedding, regions=regions)
    elif method == "admissible":
        frac = psi_admissible(poset, embedding=embedding, regions=regions)
    elif method == "bflr":
        if skew is None:
            raise RootconeError("method bflr needs a skew diagram input")
        frac = psi_skew_paths(skew)
    else:
        raise RootconeError(f"unknown method {method}")
    _emit(frac, args.at, poset.n)
    return 0


def _cmd_sigma(args) -> int:
    poset, embedding, regions, _ = _as_poset(_read(args.input))
    method = args.method
    if method == "reduction":
        frac = sigma_reduction(poset, args.strategy)
    elif method == "planar":
        frac = sigma_planar(poset, embedding=embedding, regions=regions)
    elif method == "admissible":
        frac = sigma_admissible(poset, embedding=embedding, regions=regions)
    else:
        raise RootconeError(f"method {method} does not produce a point transform")
    _emit(frac, args.at, poset.n)
    return 0


def _cmd_triangulate(args) -> int:
    data = _read(args.input)
    order = _parse_order(args.order) if args.order else None
    if isinstance(data, SkewDiagram):
        _, line_order = skew_to_poset(data)
        from .posets import Poset as _P

        poset, _ = skew_to_poset(data)
        trees = noncrossing_alternating_trees(poset.hasse_graph(), line_order)
    else:
        trees = []
        for _, piece in decompose_lr(data.poset):
            piece_order = order
            if piece_order is not None:
                piece_order = EdgeOrder(
                    [e for e in order.sequence if e in set(piece.edges)]
                    + [e for e in sorted(set(piece.edges)) if e not in order.rank]
                )
            trees.extend(ext_zero_triangulation(piece, piece_order))
        trees.sort(key=lambda t: t.edges)
    for t in trees:
        print(",".join(f"{i}-{j}" for i, j in t.edges))
    return 0


def _cmd_paths(args) -> int:
    data = _read(args.input)
    if not isinstance(data, SkewDiagram):
        raise RootconeError("paths needs a skew diagram input")
    for path in lattice_paths(data):
        print(" ".join(f"{i},{j}" for i, j in path))
    return 0


def _cmd_reduce(args) -> int:
    poset, _, _, _ = _as_poset(_read(args.input))
    s = reduce_full(poset.hasse_graph(), args.strategy, seed=args.seed)
    if args.beta is None:
        for line in format_formal_sum(s):
            print(line)
    elif args.beta == 0:
        _emit(psi_from_sum(s), args.at, poset.n)
    else:
        _emit(sigma_from_sum(s), args.at, poset.n)
    return 0


def _cmd_notch(args) -> int:
    poset, _, _, _ = _as_poset(_read(args.input))
    notches = find_notches(poset)
    failures = 0
    for t in notches:
        line = f"{t.shape} {t.a} {t.b} {t.c}"
        if args.check:
            from .evaluators import check_notch_identity

            ok = check_notch_identity(poset, t)
            line += " ok" if ok else " FAIL"
            failures += not ok
        print(line)
    return 1 if failures else 0


def _cmd_verify(args) -> int:
    poset, embedding, regions, skew = _as_poset(_read(args.input))
    all_ok = True
    for label, reports in (
        ("psi", psi_reports(poset, embedding, regions, skew)),
        ("sigma", sigma_reports(poset, embedding, regions)),
    ):
        if not reports:
            continue
        names = [r.method for r in reports]
        matrix = agreement_matrix(reports)
        print(f"{label} methods: {' '.join(names)}")
        width = max(len(n) for n in names)
        for name, row in zip(names, matrix):
            cells = " ".join("ok " if v else "DIFF" for v in row)
            print(f"  {name:<{width}} {cells}")
            all_ok &= all(row)
    print("agreement: all methods agree" if all_ok else "agreement: DISAGREEMENT")
    return 0 if all_ok else 1


def _cmd_corpus(args) -> int:
    posets = corpus_mod.corpus_gen(args.seed, args.nmax, args.count)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for k, p in enumerate(posets):
        (outdir / f"poset_{k:04d}.poset").write_text(
            serialize_poset(p), encoding="utf-8"
        )
    print(f"wrote {len(posets)} posets to {outdir}")
    return 0


def _cmd_export_dot(args) -> int:
    poset, _, _, _ = _as_poset(_read(args.input))
    print("digraph {")
    for i, j in sorted(poset.covers):
        print(f"  {i} -> {j};")
    print("}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rootcone")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, fn, **flags):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        return sp

    methods = ["oracle", "general", "planar", "bflr", "admissible", "reduction"]
    sp = add("psi", _cmd_psi)
    sp.add_argument("input")
    sp.add_argument("--method", choices=methods, default="oracle")
    sp.add_argument("--at")
    sp.add_argument("--strategy", choices=["lexmin", "lexmax", "random"], default="lexmin")

    sp = add("sigma", _cmd_sigma)
    sp.add_argument("input")
    sp.add_argument("--method", choices=["planar", "admissible", "reduction"], default="reduction")
    sp.add_argument("--at")
    sp.add_argument("--strategy", choices=["lexmin", "lexmax", "random"], default="lexmin")

    sp = add("triangulate", _cmd_triangulate)
    sp.add_argument("input")
    sp.add_argument("--order")

    sp = add("paths", _cmd_paths)
    sp.add_argument("input")

    sp = add("reduce", _cmd_reduce)
    sp.add_argument("input")
    sp.add_argument("--strategy", choices=["lexmin", "lexmax", "random"], default="lexmin")
    sp.add_argument("--beta", type=int, choices=[0, -1])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--at")

    sp = add("notch", _cmd_notch)
    sp.add_argument("input")
    sp.add_argument("--check", action="store_true")

    sp = add("verify", _cmd_verify)
    sp.add_argument("input")

    sp = add("corpus", _cmd_corpus)
    sp.add_argument("outdir")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--nmax", type=int, default=7)
    sp.add_argument("--count", type=int, default=20)

    sp = add("export-dot", _cmd_export_dot)
    sp.add_argument("input")

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except RootconeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
