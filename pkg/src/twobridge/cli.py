"""Command-line front end.

Every subcommand prints JSON by default (or plain text with
--format text) and is deterministic: identical invocations produce
byte-identical output.  Exit codes: 0 success, 1 domain error,
2 argument error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

# Lets argparse accept negative slopes like -1/2 as positional arguments.
_NEGATIVE_SLOPE = re.compile(r"^-\d+(/\d+)?$")

from . import cancel, decide, diagram, oracle, relator
from .farey import Slope, reduce_to_fundamental, tau
from .oracle import SearchBudget
from .words import check_word


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _word(text: str) -> str:
    try:
        return check_word(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _dump(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _emit(payload, args, text_lines=None):
    if args.format == "json":
        print(_dump(payload))
    else:
        for line in (text_lines if text_lines is not None
                     else [f"{k}: {v}" for k, v in payload.items()]):
            print(line)
    return 0


def _cmd_relator(args):
    bundle = relator.riley_word(args.slope)
    payload = {"slope": str(bundle.slope), "word": bundle.word,
               "hat": bundle.hat_word, "s_seq": list(bundle.s_seq)}
    return _emit(payload, args)


def _cmd_sseq(args):
    payload = {"s_seq": list(relator.s_of_slope(args.slope))}
    return _emit(payload, args)


def _cmd_decompose(args):
    split = relator.decompose(args.slope)
    payload = {"slope": str(split.slope), "s1": list(split.s1),
               "s2": list(split.s2)}
    return _emit(payload, args)


def _cmd_pieces(args):
    bundle = relator.riley_word(args.slope)
    relators = cancel.symmetrize(bundle.word)
    if args.max_n is not None:
        found = cancel.maximal_n_pieces(relators, bundle.word, args.max_n)
        payload = {"slope": str(args.slope), "n": args.max_n,
                   "maximal_pieces": found}
    else:
        payload = {"slope": str(args.slope),
                   "pieces": sorted(relators.pieces, key=lambda w: (len(w), w))}
    return _emit(payload, args)


def _cmd_check_sc(args):
    bundle = relator.riley_word(args.slope)
    relators = cancel.symmetrize(bundle.word)
    count = cancel.min_piece_count(relators, bundle.word)
    witness = cancel.min_piece_decomposition(relators, bundle.word)
    payload = {"slope": str(args.slope),
               "c4": cancel.check_C(relators, 4),
               "t4": cancel.check_T(relators, 4),
               "min_piece_count": count,
               "witness_decomposition": witness}
    return _emit(payload, args)


def _cmd_reduce(args):
    reduced = reduce_to_fundamental(args.r, args.s)
    payload = {"r": str(args.r), "s": str(args.s), "reduced": str(reduced)}
    return _emit(payload, args)


def _cmd_tau(args):
    payload = {"p": args.p, "s": str(args.s), "image": str(tau(args.p, args.s))}
    return _emit(payload, args)


def _cmd_decide(args):
    verdict = decide.decide_homotopic(args.p, args.s, args.s2)
    payload = {"p": args.p, "s": str(args.s), "s_prime": str(args.s2),
               "homotopic": verdict.homotopic, "reason": verdict.reason,
               "reduced_s": str(verdict.reduced_s),
               "reduced_s_prime": str(verdict.reduced_s2),
               "certificate": (diagram.to_dict(verdict.certificate)
                               if verdict.certificate else None)}
    if args.certificate == "svg" and verdict.certificate is not None:
        payload["certificate_svg"] = diagram.emit(
            verdict.certificate, "svg").decode()
    text = [f"homotopic: {verdict.homotopic}", f"reason: {verdict.reason}",
            f"reduced: {verdict.reduced_s} and {verdict.reduced_s2}"]
    return _emit(payload, args, text)


def _cmd_fan(args):
    fan = diagram.build_fan(args.p, args.s, layers=args.layers)
    if args.emit == "json":
        sys.stdout.write(diagram.emit(fan, "json").decode())
    else:
        sys.stdout.write(diagram.emit(fan, args.emit).decode())
    return 0


def _cmd_oracle(args):
    budget = SearchBudget(max_steps=args.budget, timeout=args.timeout)
    verdict = oracle.cross_examine(args.p, args.w1, args.w2, budget,
                                   max_degree=args.max_degree)
    payload = {"p": args.p, "w1": args.w1, "w2": args.w2,
               "status": verdict.status, "witness": verdict.witness}
    return _emit(payload, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Relator words, small-cancellation checks, annular "
                    "diagrams and loop-homotopy decisions for torus "
                    "two-bridge link groups.")
    parser._negative_number_matcher = _NEGATIVE_SLOPE
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("relator", help="relator word of a slope")
    cmd.add_argument("slope", type=_slope)
    cmd.set_defaults(func=_cmd_relator)

    cmd = sub.add_parser("sseq", help="block sequence of a slope")
    cmd.add_argument("slope", type=_slope)
    cmd.set_defaults(func=_cmd_sseq)

    cmd = sub.add_parser("decompose", help="the (S1,S2,S1,S2) split")
    cmd.add_argument("slope", type=_slope)
    cmd.set_defaults(func=_cmd_decompose)

    cmd = sub.add_parser("pieces", help="pieces of the symmetrized relator set")
    cmd.add_argument("slope", type=_slope)
    cmd.add_argument("--max-n", type=int, choices=(1, 2), default=None)
    cmd.set_defaults(func=_cmd_pieces)

    cmd = sub.add_parser("check-sc", help="small-cancellation verdicts")
    cmd.add_argument("slope", type=_slope)
    cmd.set_defaults(func=_cmd_check_sc)

    cmd = sub.add_parser("reduce", help="fundamental-interval representative")
    cmd.add_argument("r", type=_slope)
    cmd.add_argument("s", type=_slope)
    cmd.set_defaults(func=_cmd_reduce)

    cmd = sub.add_parser("tau", help="the involution c/d -> c/(c*p-d)")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("s", type=_slope)
    cmd.set_defaults(func=_cmd_tau)

    cmd = sub.add_parser("decide", help="are two loops homotopic?")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("s", type=_slope)
    cmd.add_argument("s2", type=_slope, metavar="s'")
    cmd.add_argument("--certificate", choices=("svg",), default=None)
    cmd.set_defaults(func=_cmd_decide)

    cmd = sub.add_parser("fan", help="build an annular fan diagram")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--s", type=_slope, required=True)
    cmd.add_argument("--layers", type=int, default=1)
    cmd.add_argument("--emit", choices=("json", "dot", "svg"), default="json")
    cmd.set_defaults(func=_cmd_fan)

    cmd = sub.add_parser("oracle", help="conjugacy cross-examination")
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--w1", type=_word, required=True)
    cmd.add_argument("--w2", type=_word, required=True)
    cmd.add_argument("--budget", type=int, default=SearchBudget.max_steps)
    cmd.add_argument("--max-degree", type=int, default=7)
    cmd.add_argument("--timeout", type=float, default=None)
    cmd.set_defaults(func=_cmd_oracle)

    for action in parser._subparsers._group_actions:
        for subparser in action.choices.values():
            subparser._negative_number_matcher = _NEGATIVE_SLOPE
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
