"""Command-line front end.

    boxcol repr   --mode interval|circular [--in FILE] [--format graph6|edgelist]
    boxcol oracle {box,cdim,chi,wcol,col,wcolstar,posetdim} [--in FILE]
    boxcol corpus --count N --n-min A --n-max B --p P[,P...] --seed S --mode M

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exceeded.  Output is one JSON document on stdout (or ``--out``); it is
byte-identical for identical inputs and seeds unless ``--timing`` is given.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from collections import Counter
from typing import Sequence

from . import oracle
from .coloring import exact_wcol_star2
from .errors import BoxcolError, BudgetExceeded, OracleBudget
from .graph import Graph, SplitMix64, gnp, parse_graph, sniff_format
from .ordering import ReachMode, exact_coloring_number
from .pipeline import random_order, represent
from .poset import exact_poset_dimension, parse_poset

EXIT_OK, EXIT_UNVERIFIED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_input(path: str | None) -> bytes:
    try:
        if path is None or path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise InputError(f"non-ASCII input at byte {exc.start}") from None


def _load_graph(path: str | None, fmt: str | None) -> tuple[Graph, dict]:
    raw = _read_input(path)
    text = _decode(raw)
    fmt = fmt or sniff_format(text)
    try:
        g = parse_graph(text, fmt)
    except (BoxcolError, ValueError) as exc:
        raise InputError(f"bad {fmt} input: {exc}") from None
    desc = {
        "format": fmt,
        "sha256": hashlib.sha256(raw).hexdigest(),
        "n": g.n,
        "m": g.edge_count,
    }
    return g, desc


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(g: Graph, mode: str, order_kind: str, seed: int, with_oracle: bool) -> dict:
    order = random_order(g.n, seed) if order_kind == "random" else None
    rep = represent(g, mode, order)
    bounds = rep.bounds()
    if with_oracle:
        for key, fn in (("box", oracle.exact_boxicity), ("cdim", oracle.exact_circular_dimension)):
            try:
                bounds[key] = fn(g)
            except BudgetExceeded:
                bounds[key] = None
    violation = None
    if not rep.verified:
        violation = {"pair": list(rep.verification.pair), "kind": rep.verification.kind}
    return {
        "mode": mode,
        "order": list(rep.certificate.order.sequence),
        "coloring": {"c": rep.certificate.c, "colors": list(rep.certificate.coloring.colors)},
        "systems": [s.to_json() for s in rep.systems],
        "verified": rep.verified,
        "violation": violation,
        "bounds": bounds,
    }


def cmd_repr(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    g, desc = _load_graph(args.input, args.format)
    if g.n == 0:
        raise InputError("graph has no vertices")
    report = {"input": desc}
    report.update(_report(g, args.mode, args.order, args.seed, args.oracle))
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    _emit(report, args.out)
    return EXIT_OK if report["verified"] else EXIT_UNVERIFIED


def _budget(args: argparse.Namespace, default_n: int) -> OracleBudget:
    return OracleBudget(max_n=args.max_n or default_n, max_candidates=args.max_candidates)


def cmd_oracle(args: argparse.Namespace) -> int:
    target = args.target
    out: dict = {"target": target}
    try:
        if target == "posetdim":
            text = _decode(_read_input(args.input))
            try:
                p = parse_poset(text)
            except BoxcolError as exc:
                raise InputError(f"bad poset input: {exc}") from None
            out["input"] = {"format": "poset", "m": p.m}
            out["value"] = exact_poset_dimension(p, _budget(args, 8))
        else:
            g, desc = _load_graph(args.input, args.format)
            out["input"] = desc
            if target == "box":
                cover = oracle.boxicity_cover(g, _budget(args, 6))
                out["value"] = len(cover)
                out["witness"] = [f.edges() for f in cover]
            elif target == "cdim":
                cover = oracle.circular_dimension_cover(g, _budget(args, 6))
                out["value"] = len(cover)
                out["witness"] = [f.edges() for f in cover]
            elif target == "chi":
                out["value"] = oracle.exact_chromatic_number(g, _budget(args, 16))
            elif target in ("wcol", "col"):
                mode = ReachMode.WEAK if target == "wcol" else ReachMode.STRONG
                value, order = exact_coloring_number(g, mode, args.r, _budget(args, 9))
                out["r"] = args.r
                out["value"] = value
                out["witness"] = list(order.sequence)
            elif target == "wcolstar":
                out["value"] = exact_wcol_star2(g, _budget(args, 7))
    except BudgetExceeded as exc:
        out["value"] = None
        out["bounds"] = exc.bounds
        out["error"] = str(exc)
        _emit(out, args.out)
        return EXIT_BUDGET
    _emit(out, args.out)
    return EXIT_OK


def _parse_probs(text: str) -> list[float]:
    try:
        probs = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise InputError(f"--p expects numbers, got {text!r}") from None
    if not probs or any(not 0.0 <= p <= 1.0 for p in probs):
        raise InputError(f"--p values must lie in [0, 1], got {text!r}")
    return probs


def corpus_graphs(count: int, n_min: int, n_max: int, probs: Sequence[float], seed: int):
    """Seeded corpus: item ``i`` uses ``probs[i % len(probs)]``.

    A master :class:`SplitMix64` seeded with ``seed`` draws, per item, the
    vertex count ``n_min + below(n_max - n_min + 1)`` and then the 64-bit
    seed handed to :func:`boxcol.graph.gnp`.
    """
    rng = SplitMix64(seed)
    for i in range(count):
        n = n_min + rng.below(n_max - n_min + 1)
        gseed = rng.next()
        p = probs[i % len(probs)]
        yield i, p, gseed, gnp(n, p, gseed)


def cmd_corpus(args: argparse.Namespace) -> int:
    probs = _parse_probs(args.p)
    if args.count < 0:
        raise InputError("--count must be non-negative")
    if not 1 <= args.n_min <= args.n_max:
        raise InputError("need 1 <= --n-min <= --n-max")
    start = time.perf_counter()
    verified = 0
    colors: Counter[int] = Counter()
    max_systems = 0
    failures = []
    items = open(args.items, "w", encoding="utf-8") if args.items else None
    try:
        for i, p, gseed, g in corpus_graphs(args.count, args.n_min, args.n_max, probs, args.seed):
            rep = represent(g, args.mode)
            verified += rep.verified
            colors[rep.certificate.c] += 1
            max_systems = max(max_systems, len(rep.systems))
            if not rep.verified:
                failures.append(i)
            if items:
                row = {"index": i, "n": g.n, "m": g.edge_count, "p": p, "seed": gseed,
                       "c": rep.certificate.c, "systems": len(rep.systems), "verified": rep.verified}
                items.write(json.dumps(row) + "\n")
    finally:
        if items:
            items.close()
    summary = {
        "mode": args.mode,
        "count": args.count,
        "seed": args.seed,
        "p": probs,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "verified": verified,
        "failed": failures,
        "c_distribution": {str(c): colors[c] for c in sorted(colors)},
        "max_systems": max_systems,
    }
    if args.timing:
        summary["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    _emit(summary, args.out)
    return EXIT_OK if verified == args.count else EXIT_UNVERIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxcol", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph_input: bool = True) -> None:
        p.add_argument("--in", dest="input", metavar="FILE", help="input file (default: stdin)")
        if graph_input:
            p.add_argument("--format", choices=["graph6", "edgelist"], help="default: sniff")
        p.add_argument("--out", metavar="FILE", help="output file (default: stdout)")

    p = sub.add_parser("repr", help="build and verify an intersection representation")
    common(p)
    p.add_argument("--mode", choices=["interval", "circular"], default="interval")
    p.add_argument("--order", choices=["degeneracy", "random"], default="degeneracy")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", action="store_true", help="add exact box/cdim when small enough")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_repr)

    p = sub.add_parser("oracle", help="exact brute-force values for small inputs")
    p.add_argument("target", choices=["box", "cdim", "chi", "wcol", "col", "wcolstar", "posetdim"])
    common(p)
    p.add_argument("--r", type=int, default=2, help="radius for wcol/col")
    p.add_argument("--max-n", type=int, help="override the size limit")
    p.add_argument("--max-candidates", type=int, default=10**7)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("corpus", help="run the pipeline over a seeded random corpus")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--p", default="0.3", help="edge probability, or a comma list cycled per item")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["interval", "circular"], default="interval")
    p.add_argument("--items", metavar="FILE", help="write one JSON line per graph")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"boxcol: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"boxcol: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
