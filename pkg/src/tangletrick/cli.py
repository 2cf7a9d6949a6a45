"""Command-line surface for the engine.

Exit codes: 0 on success, 2 when the command line itself cannot be parsed
(argparse's convention), 1 on a domain error such as a malformed fraction
or word.  Every subcommand accepts --json to emit a single JSON object
instead of plain text.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .braid import braid_to_psl2, central_power, positivize
from .projrat import format_projrat, parse_projrat
from .psl2 import format_psl2, word_to_psl2
from .service import run as run_service
from .session import (
    Phase,
    caller_move,
    create_session,
    hint,
    magician_move,
    random_caller_word,
    reveal,
)
from .solver import shortest_untangle, solution_chain, untangle_moves
from .tangle import invariant_of_word
from .words import (
    braid_to_moves,
    format_braid,
    format_grouped,
    format_moves,
    free_reduce,
    parse_braid,
    parse_moves,
)


def cmd_invariant(args) -> tuple[str, dict]:
    w = parse_moves(args.moves)
    x = invariant_of_word(w)
    return format_projrat(x), {"moves": format_moves(w), "invariant": format_projrat(x)}


def cmd_solve(args) -> tuple[str, dict]:
    x = parse_projrat(args.fraction)
    w = untangle_moves(x)
    return format_moves(w), {
        "fraction": format_projrat(x),
        "moves": format_moves(w),
        "length": len(w),
    }


def cmd_steps(args) -> tuple[str, dict]:
    x = parse_projrat(args.fraction)
    chain = solution_chain(x)
    word = tuple(m for m, _ in chain)
    lines = [format_projrat(x)]
    lines.extend(f"{m}  ->  {format_projrat(value)}" for m, value in chain)
    if chain:
        lines.append(f"moves: {format_grouped(word)}")
        lines.append(f"word: {format_moves(word)}")
    else:
        lines.append("already untangled")
    return "\n".join(lines), {
        "fraction": format_projrat(x),
        "chain": [{"move": m, "value": format_projrat(v)} for m, v in chain],
        "moves": format_grouped(word),
        "word": format_moves(word),
    }


def cmd_shortest(args) -> tuple[str, dict]:
    x = parse_projrat(args.fraction)
    w = shortest_untangle(x, args.max)
    if w is None:
        text = f"no solution within {args.max} moves"
    elif w == ():
        text = "(already untangled)"
    else:
        text = format_moves(w)
    return text, {
        "fraction": format_projrat(x),
        "moves": format_moves(w) if w is not None else None,
        "length": len(w) if w is not None else None,
        "max": args.max,
    }


def cmd_braid(args) -> tuple[str, dict]:
    b = parse_braid(args.word)
    if args.action == "mat":
        mat = braid_to_psl2(b)
        return format_psl2(mat), {"braid": format_braid(b), "matrix": format_psl2(mat)}
    if args.action == "moves":
        w = braid_to_moves(b)
        return format_moves(w), {"braid": format_braid(b), "moves": format_moves(w)}
    if args.action == "positivize":
        pos = positivize(b)
        return format_braid(pos), {"braid": format_braid(b), "positive": format_braid(pos)}
    k = central_power(b)
    text = str(k) if k is not None else "not central"
    return text, {"braid": format_braid(b), "centralPower": k}


def cmd_word(args) -> tuple[str, dict]:
    w = parse_moves(args.moves)
    if args.action == "reduce":
        reduced = free_reduce(w)
        return format_moves(reduced), {"moves": format_moves(w), "reduced": format_moves(reduced)}
    mat = word_to_psl2(w)
    return format_psl2(mat), {"moves": format_moves(w), "matrix": format_psl2(mat)}


def cmd_simulate(args) -> tuple[str, dict]:
    s = create_session(args.seed)
    caller_word = random_caller_word(args.seed, args.tangle_len)
    lines = [f"session {s.id} (seed {args.seed})"]
    for m in caller_word:
        s = caller_move(s, m)
        lines.append(f"caller:   {m}  ->  {format_projrat(s.state.invariant)}")
    s, revealed = reveal(s)
    lines.append(f"assistant reveals: {format_projrat(revealed)}")
    magician_word = []
    while s.phase is not Phase.SOLVED:
        m = hint(s)
        s = magician_move(s, m)
        magician_word.append(m)
        lines.append(f"magician: {m}  ->  {format_projrat(s.state.invariant)}")
    lines.append(f"solved in {len(magician_word)} moves" if magician_word
                 else "already untangled at the reveal")
    return "\n".join(lines), {
        "seed": args.seed,
        "callerWord": format_moves(caller_word),
        "revealed": format_projrat(revealed),
        "magicianWord": format_moves(tuple(magician_word)),
        "phase": s.phase.value,
    }


def cmd_serve(args) -> tuple[str, dict]:
    run_service(host=args.host, port=args.port, persist_path=args.persist)
    return "", {}


def _allow_negative_fractions(parser: argparse.ArgumentParser) -> None:
    # argparse only recognizes bare negative integers as positionals; widen
    # the matcher so -9/8 and -inf reach the fraction arguments.
    parser._negative_number_matcher = re.compile(r"^-(\d+(/\d+)?|inf)$")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a single JSON object instead of text")

    parser = argparse.ArgumentParser(
        prog="tangletrick",
        description="Exact engine for the rational tangle trick.",
    )
    parser.add_argument("--json", action="store_true",
                        help="emit a single JSON object instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", parents=[common],
                       help="fold a move word from 0 and print the invariant")
    p.add_argument("moves", help="move word, e.g. RTRT or 'T^5 R'")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("solve", parents=[common],
                       help="positive move word driving a fraction back to 0")
    p.add_argument("fraction", help='value in Q ∪ {inf}, e.g. 146/57, -2, inf')
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("steps", parents=[common],
                       help="the untangling chain with every intermediate value")
    p.add_argument("fraction")
    p.set_defaults(func=cmd_steps)

    p = sub.add_parser("shortest", parents=[common],
                       help="breadth-first shortest untangling word")
    p.add_argument("fraction")
    p.add_argument("--max", type=int, default=20, help="depth bound (default 20)")
    p.set_defaults(func=cmd_shortest)

    p = sub.add_parser("braid", parents=[common], help="braid word operations")
    p.add_argument("action", choices=("mat", "moves", "positivize", "central"))
    p.add_argument("word", help="braid word, e.g. abA or 'a^3 B'")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("word", parents=[common], help="move word operations")
    p.add_argument("action", choices=("reduce", "mat"))
    p.add_argument("moves")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("simulate", parents=[common],
                       help="scripted end-to-end performance transcript")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tangle-len", type=int, default=12)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP session service")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--persist", default=None, help="JSON snapshot file for session persistence")
    p.set_defaults(func=cmd_serve)

    _allow_negative_fractions(parser)
    for action in parser._subparsers._group_actions:
        for subparser in action.choices.values():
            _allow_negative_fractions(subparser)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, payload = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload))
    elif text:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
