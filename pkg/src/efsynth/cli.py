"""Command-line front end.

Exit codes: 0 success, 1 negative answer, 2 usage error, 3 input error,
4 capacity error.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from .distinguish import phi_set
from .efgame import duplicator_wins, sim_components
from .errors import CapacityError, EFSynthError, InconsistentSampleError, SampleParseError
from .formulas.macros import expand
from .formulas.text import deserialize, render, to_json_obj
from .semantics import DUPLICATOR, SPOILER, game_winner, holds
from .strings import Alphabet
from .synthesis import Sample, check_consistent, minimize_ddf, synthesize

__all__ = ["parse_sample", "main"]

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3, 4


def parse_sample(text: str) -> Sample:
    """Read a sample file.

    ``#`` starts a comment.  ``@alphabet abc`` declares the symbols; data
    lines are ``+ word`` or ``- word``.
    """
    alphabet = None
    labels = {}
    order = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            directive, _, rest = line.partition(" ")
            if directive != "@alphabet":
                raise SampleParseError(f"unknown directive {directive!r}", lineno)
            if alphabet is not None:
                raise SampleParseError("alphabet declared twice", lineno)
            symbols = "".join(rest.split())
            try:
                alphabet = Alphabet(tuple(symbols))
            except ValueError as exc:
                raise SampleParseError(str(exc), lineno) from None
            continue
        label, word = line[0], line[1:]
        if label not in "+-":
            raise SampleParseError(f"unknown label {label!r}; expected '+' or '-'", lineno)
        if word and not word[0].isspace():
            raise SampleParseError("label must be followed by whitespace", lineno)
        word = word.strip()
        if not word:
            raise SampleParseError("empty string", lineno)
        if any(ch.isspace() for ch in word):
            raise SampleParseError(f"string {word!r} contains whitespace", lineno)
        if alphabet is not None:
            bad = sorted(set(word) - set(alphabet.symbols))
            if bad:
                raise SampleParseError(f"symbols {bad} are not in the alphabet {alphabet}", lineno)
        seen = labels.get(word)
        if seen is None:
            labels[word] = label
            order.append(word)
        elif seen != label:
            raise InconsistentSampleError(f"line {lineno}: {word!r} is labelled both '+' and '-'")
    if not order:
        raise SampleParseError("sample has no labelled strings")
    P = [w for w in order if labels[w] == "+"]
    N = [w for w in order if labels[w] == "-"]
    return Sample(tuple(P), tuple(N), alphabet)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt(x):
    return "inf" if x == float("inf") else str(int(x))


def cmd_synth(args):
    sample = parse_sample(_read(args.file))
    if args.minimize:
        h = minimize_ddf(sample, exact_limit=args.exact_limit, mode=args.mode)
    else:
        h = synthesize(sample)
    f = h.formula
    if args.json:
        payload = {
            "formula": to_json_obj(expand(f) if args.expand else f),
            "rank": h.qr,
            "disjuncts": h.m,
            "method": h.metadata.get("method"),
        }
        print(json.dumps(payload, separators=(",", ":"), ensure_ascii=False))
    else:
        print(f"rank: {h.qr}")
        print(f"disjuncts: {h.m}")
        print("formula: " + render(f, "ascii" if args.expand else "macro-names"))
    return EXIT_OK


def cmd_efsim(args):
    c = sim_components(args.u, args.v)
    for name, value in c.as_dict().items():
        print(f"{name} = {_fmt(value)}")
    print(f"min = {c.efsim}")
    return EXIT_OK


def cmd_phi(args):
    phis = phi_set(args.u, args.v, args.r)
    print(f"{len(phis)} formulas")
    for e in phis.entries:
        print(f"{e.describe()}\t{render(e.formula)}")
    return EXIT_OK if phis else EXIT_NO


def cmd_game(args):
    winner = DUPLICATOR if duplicator_wins(args.u, args.v, args.r) else SPOILER
    print(f"winner: {winner}")
    if args.oracle:
        oracle = game_winner(args.u, args.v, args.r, max_states=args.max_states)
        print(f"oracle: {oracle}")
        print(f"agreement: {'yes' if oracle == winner else 'no'}")
    return EXIT_OK if winner == SPOILER else EXIT_NO


def cmd_eval(args):
    f = deserialize(_read(args.formula_file))
    result = holds(args.string, f)
    print("true" if result else "false")
    return EXIT_OK if result else EXIT_NO


def cmd_check(args):
    sample = parse_sample(_read(args.file))
    f = deserialize(_read(args.formula_file))
    report = check_consistent(sample, f, cross_check=args.cross_check)
    print(f"consistent: {'yes' if report.consistent else 'no'}")
    print("false negatives: " + (" ".join(report.false_negatives) or "none"))
    print("false positives: " + (" ".join(report.false_positives) or "none"))
    if args.cross_check:
        print("evaluator disagreements: " + (" ".join(report.disagreements) or "none"))
    return EXIT_OK if report.consistent else EXIT_NO


def _nonempty(text):
    if not text:
        raise argparse.ArgumentTypeError("strings must be nonempty")
    return text


def _natural(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="efsynth",
        description="Synthesize first-order sentences over strings from labelled samples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="learn a consistent sentence of minimal quantifier rank")
    p.add_argument("file", help="sample file, or - for stdin")
    p.add_argument("--minimize", action="store_true", help="use as few disjuncts as possible")
    p.add_argument("--mode", choices=("groups", "maximal"), default="groups",
                   help="conjunction family searched by --minimize")
    p.add_argument("--expand", action="store_true", help="print pure first-order syntax")
    p.add_argument("--json", action="store_true", help="print the canonical serialization")
    p.add_argument("--exact-limit", type=_natural, default=16,
                   help="largest number of positives minimized exactly")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("efsim", help="EF-similarity and its four components")
    p.add_argument("u", type=_nonempty)
    p.add_argument("v", type=_nonempty)
    p.set_defaults(func=cmd_efsim)

    p = sub.add_parser("phi", help="list the distinguishability formulas of rank at most R")
    p.add_argument("u", type=_nonempty)
    p.add_argument("v", type=_nonempty)
    p.add_argument("r", type=_natural)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("game", help="winner of the R-round EF game")
    p.add_argument("u", type=_nonempty)
    p.add_argument("v", type=_nonempty)
    p.add_argument("r", type=_natural)
    p.add_argument("--oracle", action="store_true", help="also solve the game by minimax")
    p.add_argument("--max-states", type=_natural, default=2_000_000,
                   help="memo limit of the minimax solver")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("eval", help="evaluate a serialized sentence on a string")
    p.add_argument("string", type=_nonempty)
    p.add_argument("formula_file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="check a serialized sentence against a sample")
    p.add_argument("file")
    p.add_argument("formula_file")
    p.add_argument("--cross-check", action="store_true",
                   help="also evaluate the expanded first-order formula")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"efsynth: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (EFSynthError, ValueError, OSError) as exc:
        print(f"efsynth: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
