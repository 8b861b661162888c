"""``lettericity`` command line.

Batch commands read graph6 lines (``--in -`` for stdin), validate the whole
input before computing anything, then stream one output line per graph.
Errors go to stderr as ``error: <kind>: <message>`` with a nonzero exit.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import tempfile
from contextlib import contextmanager
from typing import Iterator

from lettericity.constructor import (
    compress,
    find_homogeneous_core,
    find_palindromic_core,
)
from lettericity.exact import Budget, BudgetExceeded, lettericity_exact
from lettericity.graph import Graph, Graph6Error, from_graph6, random_graph, to_graph6
from lettericity.lettering import Lettering, canonical_word, decode, first_discrepancy
from lettericity.probability import (
    EventKind,
    ExperimentConfig,
    ExperimentResult,
    lower_bound_threshold,
    monte_carlo,
    union_bound_A,
    union_bound_B,
    union_bound_C,
)

EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, kind: str, message: str, status: int = EXIT_USAGE):
        super().__init__(message)
        self.kind = kind
        self.status = status


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


# --- input ----------------------------------------------------------------

@contextmanager
def _graph_input(path: str) -> Iterator[Iterator[tuple[str, Graph]]]:
    """Validate every line up front, then hand back a streaming reader."""
    if path == "-":
        spool = tempfile.TemporaryFile("w+", encoding="ascii")
        for line in sys.stdin:
            spool.write(line)
        spool.seek(0)
        fh = spool
    else:
        try:
            fh = open(path, encoding="ascii", errors="replace")
        except OSError as exc:
            raise CliError("io", f"cannot open {path}: {exc.strerror}") from None
    with fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if text:
                try:
                    from_graph6(text)
                except Graph6Error as exc:
                    raise CliError("parse", f"line {lineno}: {exc}") from None
        fh.seek(0)
        yield ((raw.strip(), from_graph6(raw.strip())) for raw in fh if raw.strip())


def _parse_decoder(text: str, letters: dict[str, int]) -> frozenset[tuple[int, int]]:
    """Comma-separated ordered pairs ``xy``; ``x,y,...`` single letters pair up."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if tokens and all(len(t) == 1 for t in tokens):
        if len(tokens) % 2:
            raise CliError("parse", f"decoder {text!r}: odd number of single letters")
        pairs = [tokens[i] + tokens[i + 1] for i in range(0, len(tokens), 2)]
    else:
        pairs = tokens
    out = set()
    for p in pairs:
        if len(p) != 2 or not p.isalpha() or not p.islower():
            raise CliError("parse", f"decoder pair {p!r} is not two letters a-z")
        a, b = p
        # pairs over letters absent from the word have no effect
        if a in letters and b in letters:
            out.add((letters[a], letters[b]))
    return frozenset(out)


def _load_lettering(text: str) -> Lettering:
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError("io", f"cannot open {text[1:]}: {exc.strerror}") from None
    try:
        return Lettering.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError("parse", f"lettering: {exc}") from None


def _event(args) -> EventKind:
    try:
        if args.event == "C":
            return EventKind("C", args.k if args.k is not None else 2)
        if args.k is not None:
            raise CliError("usage", f"--k only applies to event C")
        return EventKind(args.event)
    except ValueError as exc:
        raise CliError("usage", str(exc)) from None


def _parse_range(text: str) -> range:
    parts = text.split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise CliError("parse", f"--n-range {text!r}: expected lo:hi[:step]") from None
    if len(nums) not in (2, 3) or nums[0] > nums[1] or (len(nums) == 3 and nums[2] <= 0):
        raise CliError("parse", f"--n-range {text!r}: expected lo:hi[:step] with lo <= hi")
    return range(nums[0], nums[1] + 1, nums[2] if len(nums) == 3 else 1)


# --- commands -------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.n < 0 or args.count < 0:
        raise CliError("usage", "--n and --count must be non-negative")
    if not 0 <= args.seed or args.seed + args.count > 2**64:
        raise CliError("usage", "seeds must stay within unsigned 64-bit range")
    for i in range(args.count):
        _emit(to_graph6(random_graph(args.n, args.seed + i)))
    return 0


def cmd_compress(args) -> int:
    with _graph_input(args.input) as graphs:
        for text, g in graphs:
            l = compress(g)
            _emit(json.dumps({
                "graph6": text,
                "letters_used": l.alphabet_size,
                "k_saved": g.n - l.alphabet_size,
                "lettering": l.to_dict(),
            }))
    return 0


def cmd_core(args) -> int:
    if args.mode == "homogeneous" and (args.k is None or args.k < 1):
        raise CliError("usage", "--mode homogeneous needs --k >= 1")
    with _graph_input(args.input) as graphs:
        for text, g in graphs:
            if args.mode == "pigeonhole":
                core = find_palindromic_core(g) if g.n >= 2 else None
            else:
                core = find_homogeneous_core(g, args.k)
            _emit(json.dumps({
                "graph6": text,
                "mode": args.mode,
                "core": core.to_dict() if core else None,
            }))
    return 0


def cmd_exact(args) -> int:
    if args.max_nodes <= 0:
        raise CliError("usage", "--max-nodes must be positive")
    budget = Budget(max_nodes=args.max_nodes)
    status = 0
    with _graph_input(args.input) as graphs:
        for text, g in graphs:
            try:
                r = lettericity_exact(g, budget)
            except BudgetExceeded as exc:
                status = EXIT_BUDGET
                _emit(json.dumps({
                    "graph6": text,
                    "error": "budget_exceeded",
                    "lower": exc.lower,
                    "upper": exc.upper,
                    "nodes_explored": exc.nodes,
                }))
                continue
            _emit(json.dumps({
                "graph6": text,
                "lettericity": r.lettericity,
                "witness": r.witness.to_dict(),
                "nodes_explored": r.nodes_explored,
                "cochromatic": r.cochromatic,
                "lower_bound_used": r.lower_bound_used,
            }))
    return status


def cmd_verify(args) -> int:
    try:
        g = from_graph6(args.graph)
    except Graph6Error as exc:
        raise CliError("parse", str(exc)) from None
    l = _load_lettering(args.lettering)
    if len(l.word) != g.n:
        _emit(f"fail: lettering has {len(l.word)} positions, graph has {g.n} vertices")
        return 1
    bad = first_discrepancy(g, l)
    if bad is None:
        _emit("ok")
        return 0
    i, j, got, want = bad
    _emit(f"fail: positions {i},{j} (vertices {l.vertex_of[i]},{l.vertex_of[j]}) decode to {got}, graph has {want}")
    return 1


def cmd_decode(args) -> int:
    word = args.word
    if not word or not all("a" <= ch <= "z" for ch in word):
        raise CliError("parse", f"word {word!r} must be letters a-z")
    canon, letters = canonical_word(word)
    dec = _parse_decoder(args.decoder, letters)
    _emit(to_graph6(decode(canon, dec)))
    return 0


def cmd_experiment(args) -> int:
    event = _event(args)
    try:
        configs = [ExperimentConfig(n, args.trials, args.seed, event) for n in args.n]
    except ValueError as exc:
        raise CliError("usage", str(exc)) from None
    if args.workers < 1:
        raise CliError("usage", "--workers must be at least 1")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(ExperimentResult.CSV_COLUMNS)
    for cfg in configs:
        writer.writerow(_fmt_row(monte_carlo(cfg, workers=args.workers).csv_row()))
        sys.stdout.flush()
    return 0


def _fmt(x) -> str:
    if isinstance(x, float):
        return "" if math.isnan(x) else repr(x)
    return str(x)


def _fmt_row(row) -> list[str]:
    return [_fmt(x) for x in row]


def cmd_bounds(args) -> int:
    event = args.event
    if event != "C" and args.k is not None:
        raise CliError("usage", "--k only applies to event C")
    if args.k is not None and args.k < 1:
        raise CliError("usage", "--k must be at least 1")
    ns = _parse_range(args.n_range)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["event", "n", "k", "union_bound", "relaxed_bound", "k_star", "lettericity_lower_bound"])
    for n in ns:
        k_star = lower_bound = float("nan")
        if n >= 3:
            k_star, lower_bound = lower_bound_threshold(n)
        k: int | str = ""
        relaxed = float("nan")
        if event == "A":
            ub = union_bound_A(n)
        elif event == "B":
            ub = union_bound_B(n)
        else:
            k = args.k if args.k is not None else (math.ceil(k_star) if n >= 3 else 1)
            if 2 * k <= n:
                ub, relaxed = union_bound_C(n, k)
            else:
                ub = float("nan")
        writer.writerow(_fmt_row([event, n, k, ub, relaxed, k_star, lower_bound]))
    return 0


# --- parser ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lettericity", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="sample G(n, 1/2) graphs as graph6 lines")
    s.add_argument("--n", type=int, required=True, help="vertex count")
    s.add_argument("--seed", type=int, required=True, help="seed of the first graph; graph i uses seed + i")
    s.add_argument("--count", type=int, default=1, help="number of graphs (default 1)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("compress", help="letter each graph with the pigeonhole core construction")
    s.add_argument("--in", dest="input", required=True, help="graph6 file, '-' for stdin")
    s.set_defaults(func=cmd_compress)

    s = sub.add_parser("core", help="report a core per graph")
    s.add_argument("--in", dest="input", required=True, help="graph6 file, '-' for stdin")
    s.add_argument("--mode", choices=["pigeonhole", "homogeneous"], default="pigeonhole",
                   help="palindromic pigeonhole core, or a clique/anticlique of size 2k")
    s.add_argument("--k", type=int, help="pairs wanted in homogeneous mode")
    s.set_defaults(func=cmd_core)

    s = sub.add_parser("exact", help="exact lettericity with witness")
    s.add_argument("--in", dest="input", required=True, help="graph6 file, '-' for stdin")
    s.add_argument("--max-nodes", type=int, default=10**8, help="search node cap per graph (default 1e8)")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("verify", help="check a lettering against a graph")
    s.add_argument("--graph", required=True, help="graph6 string")
    s.add_argument("--lettering", required=True, help="lettering JSON, or @path to a JSON file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decode", help="graph6 of the letter graph of a word")
    s.add_argument("--word", required=True, help="letters a-z, e.g. abab")
    s.add_argument("--decoder", required=True, help="ordered pairs, e.g. 'ab,bb' (or 'a,b')")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("experiment", help="Monte Carlo estimate of an event on G(n, 1/2)")
    s.add_argument("--event", choices=["A", "B", "C"], required=True,
                   help="A: three vertices share a letter; B: separated pairs; C: core form")
    s.add_argument("--n", type=int, nargs="+", required=True, help="one or more vertex counts")
    s.add_argument("--trials", type=int, required=True, help="samples per configuration")
    s.add_argument("--seed", type=int, required=True, help="master seed (unsigned 64-bit)")
    s.add_argument("--k", type=int, help="pairs for event C (default 2)")
    s.add_argument("--workers", type=int, default=1, help="worker processes (output is identical for any value)")
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("bounds", help="union bounds and the lower-bound threshold over a range of n")
    s.add_argument("--n-range", required=True, help="lo:hi[:step], inclusive")
    s.add_argument("--event", choices=["A", "B", "C"], required=True, help="which union bound")
    s.add_argument("--k", type=int, help="pairs for event C (default ceil(k*(n)))")
    s.set_defaults(func=cmd_bounds)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CliError as exc:
        sys.stdout.flush()
        sys.stderr.write(f"error: {exc.kind}: {exc}\n")
        return exc.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
