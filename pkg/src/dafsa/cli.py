"""Command-line interface.

Exit codes: 0 success, 1 I/O or parse error, 2 unsorted input given to the
sorted builder, 3 verification failure.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from . import io as dio
from .errors import DafsaError, OutOfOrderInput, ParseError
from .oracle import canonical_form, oracle_minimal
from .sorted_builder import SortedBuilder
from .unsorted_builder import UnsortedBuilder

EXIT_IO = 1
EXIT_ORDER = 2
EXIT_VERIFY = 3


def _load(path):
    with open(path, "rb") as f:
        return dio.deserialize(f)


def _words(path):
    with open(path, "rb") as f:
        return list(dio.read_words(f))


def _build(algo, words):
    builder = SortedBuilder() if algo == "sorted" else UnsortedBuilder()
    for w in words:
        builder.add(w)
    return builder.finish(), builder.stats


def cmd_build(args, out):
    a, stats = _build(args.algo, _words(args.input))
    with open(args.output, "wb") as f:
        dio.serialize(a, f)
    if args.stats:
        for line in stats.as_lines():
            print(line, file=out)
    return 0


def cmd_add(args, out):
    builder = UnsortedBuilder(_load(args.input))
    for w in _words(args.words):
        builder.add(w)
    with open(args.output, "wb") as f:
        dio.serialize(builder.finish(), f)
    return 0


def cmd_query(args, out):
    a = _load(args.input)
    if args.word is not None:
        words = [args.word.encode("utf-8")]
    else:
        words = dio.read_words(sys.stdin.buffer)
    for w in words:
        print("1" if a.accepts(w) else "0", file=out)
    return 0


def cmd_stats(args, out):
    a = _load(args.input)
    print(f"states={a.live_count}", file=out)
    print(f"transitions={a.num_transitions()}", file=out)
    print(f"finals={a.num_finals()}", file=out)
    print(f"words={dio.count_words(a)}", file=out)
    return 0


def cmd_export(args, out):
    a = _load(args.input)
    with open(args.dot, "wb") as f:
        dio.export_dot(a, f)
    return 0


def cmd_verify(args, out):
    a = _load(args.input)
    words = _words(args.words)
    expected = oracle_minimal(words)
    same_form = canonical_form(a) == canonical_form(expected)
    same_lang = a.enumerate_language() == sorted(set(words))
    if same_form and same_lang:
        print("ok", file=out)
        return 0
    print(
        f"mismatch: canonical_form={'ok' if same_form else 'differs'} "
        f"language={'ok' if same_lang else 'differs'}",
        file=out,
    )
    return EXIT_VERIFY


def cmd_bench(args, out):
    words = _words(args.input)
    times = []
    stats = None
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        a, stats = _build(args.algo, words)
        times.append(time.perf_counter() - t0)
    letters = sum(len(w) for w in words)
    print(f"algo={args.algo}", file=out)
    print(f"words={len(words)}", file=out)
    print(f"letters={letters}", file=out)
    print(f"median_seconds={statistics.median(times):.6f}", file=out)
    print(f"states={stats.live_states}", file=out)
    print(f"peak_live_states={stats.peak_live_states}", file=out)
    print(f"rr_visits={stats.rr_visits}", file=out)
    return 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="dafsa",
        description="Build and query minimal acyclic finite-state automata.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build an automaton from a word list")
    b.add_argument("--algo", choices=("sorted", "unsorted"), default="sorted")
    b.add_argument("--in", dest="input", required=True)
    b.add_argument("--out", dest="output", required=True)
    b.add_argument("--stats", action="store_true")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("add", help="insert words into an existing automaton")
    a.add_argument("--in", dest="input", required=True)
    a.add_argument("--words", required=True)
    a.add_argument("--out", dest="output", required=True)
    a.set_defaults(func=cmd_add)

    q = sub.add_parser("query", help="membership test, prints 1 or 0 per word")
    q.add_argument("--in", dest="input", required=True)
    src = q.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--stdin", action="store_true")
    q.set_defaults(func=cmd_query)

    s = sub.add_parser("stats", help="state, transition and word counts")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_stats)

    e = sub.add_parser("export", help="write Graphviz DOT")
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--dot", required=True)
    e.set_defaults(func=cmd_export)

    v = sub.add_parser("verify", help="compare against the trie-and-minimize oracle")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--words", required=True)
    v.set_defaults(func=cmd_verify)

    bn = sub.add_parser("bench", help="time a build")
    bn.add_argument("--algo", choices=("sorted", "unsorted"), default="sorted")
    bn.add_argument("--in", dest="input", required=True)
    bn.add_argument("--repeat", type=int, default=5)
    bn.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except OutOfOrderInput as exc:
        print(f"dafsa: {exc}", file=sys.stderr)
        return EXIT_ORDER
    except (OSError, ParseError, DafsaError) as exc:
        print(f"dafsa: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
