"""Command-line entry point: classify, ppositions, verify, table, play, serve.

Exit codes: 0 success (verify: all checks pass), 1 verification
mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .modular import Move, MoveKind, classify, is_legal, modular_p_set, winning_move
from .service import engine_reply, illegal_reason, move_to_wire, serve_forever
from .verify import all_pass, p_position_table, reports_to_csv, verify_range
from .wythoff import Position

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _describe_move(move: Move) -> str:
    if move.kind is MoveKind.TYPE1_PILE1:
        return f"Type I: take {move.k1} from pile 1"
    if move.kind is MoveKind.TYPE1_PILE2:
        return f"Type I: take {move.k2} from pile 2"
    return f"Type II: take {move.k1} from pile 1 and {move.k2} from pile 2"


def cmd_classify(args: argparse.Namespace) -> int:
    pos = (args.x, args.y)
    label = classify(pos, args.m)
    move = winning_move(pos, args.m)
    if args.format == "json":
        print(json.dumps({"label": label, "winning_move": move_to_wire(move)}))
    else:
        print(label)
        if move is not None:
            print(f"winning move: {_describe_move(move)} -> {move.apply(pos)}")
    return EXIT_OK


def cmd_ppositions(args: argparse.Namespace) -> int:
    positions = sorted(modular_p_set(args.m).positions())
    if args.format == "json":
        print(json.dumps({"count": len(positions), "positions": [list(p) for p in positions]}))
    else:
        plural = "" if len(positions) == 1 else "s"
        print(f"{len(positions)} P-position{plural} for m={args.m}:")
        for x, y in positions:
            print(f"({x}, {y})")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = verify_range(args.m_lo, args.m_hi, args.box_factor)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    elif args.format == "csv":
        print(reports_to_csv(reports), end="")
    else:
        for report in reports:
            print(report.to_text())
        print("all checks passed" if all_pass(reports) else "FAILURES found")
    return EXIT_OK if all_pass(reports) else EXIT_MISMATCH


def cmd_table(args: argparse.Namespace) -> int:
    table = p_position_table(args.m_values)
    print(table.to_csv() if args.format == "csv" else table.to_text(), end="")
    if args.format != "csv":
        print()
    return EXIT_OK


def _parse_move_line(line: str) -> Move | None:
    """Parse interactive move syntax: 'I1 k', 'I2 k' or 'II k1 k2'."""
    parts = line.split()
    try:
        if len(parts) == 2 and parts[0].upper() == "I1":
            return Move(MoveKind.TYPE1_PILE1, int(parts[1]), 0)
        if len(parts) == 2 and parts[0].upper() == "I2":
            return Move(MoveKind.TYPE1_PILE2, 0, int(parts[1]))
        if len(parts) == 3 and parts[0].upper() == "II":
            return Move(MoveKind.TYPE2, int(parts[1]), int(parts[2]))
    except ValueError:
        return None
    return None


def cmd_play(args: argparse.Namespace) -> int:
    m = args.m
    pos: Position = (args.x, args.y)
    print(f"modular Wythoff, m={m}; the player who cannot move loses.")
    print("moves: 'I1 k' (pile 1), 'I2 k' (pile 2), 'II k1 k2' (both piles,")
    print(f"amounts congruent mod {m}); 'quit' resigns.")

    if args.engine_first:
        reply = engine_reply(pos, m)
        if reply is None:
            print("nothing to play: the game starts at (0, 0); engine loses.")
            return EXIT_OK
        pos = reply.apply(pos)
        print(f"engine: {_describe_move(reply)} -> {pos}")

    while True:
        if pos == (0, 0):
            print("no moves left: you lose.")
            return EXIT_OK
        print(f"position: piles {pos[0]} and {pos[1]}")
        try:
            line = input("your move> ").strip()
        except EOFError:
            print("resigned.")
            return EXIT_OK
        if line.lower() in {"quit", "exit", "resign"}:
            print("resigned.")
            return EXIT_OK
        move = _parse_move_line(line)
        if move is None:
            print("could not parse that; use 'I1 k', 'I2 k' or 'II k1 k2'.")
            continue
        if not is_legal(pos, move, m):
            print(illegal_reason(pos, move, m))
            continue
        pos = move.apply(pos)
        if pos == (0, 0):
            print("engine has no move: you win!")
            return EXIT_OK
        reply = engine_reply(pos, m)
        assert reply is not None
        pos = reply.apply(pos)
        print(f"engine: {_describe_move(reply)} -> {pos}")


def cmd_serve(args: argparse.Namespace) -> int:
    serve_forever(args.host, args.port, args.static)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modwythoff",
        description="Exact solver and optimal-strategy engine for modular Wythoff's game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, choices: tuple[str, ...]) -> None:
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("classify", help="label a position P or N")
    p.add_argument("-m", type=int, required=True, help="modulus (>= 1)")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    add_format(p, ("text", "json"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ppositions", help="list the finite P-position set")
    p.add_argument("-m", type=int, required=True)
    add_format(p, ("text", "json"))
    p.set_defaults(func=cmd_ppositions)

    p = sub.add_parser("verify", help="cross-check closed form against the oracle")
    p.add_argument("--range", dest="m_range", nargs=2, type=int, required=True,
                   metavar=("M_LO", "M_HI"))
    p.add_argument("--box-factor", type=float, default=3.0)
    add_format(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="P-position table for several moduli")
    p.add_argument("m_values", nargs="+", type=int, metavar="M")
    add_format(p, ("text", "csv"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--engine-first", action="store_true")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the HTTP JSON API (and web client)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", default=None,
                   help="directory of built web-client files to serve at /")
    p.set_defaults(func=cmd_serve)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "m", None) is not None and args.m < 1:
        parser.error(f"m must be >= 1, got {args.m}")
    for attr in ("x", "y"):
        value = getattr(args, attr, None)
        if value is not None and value < 0:
            parser.error(f"{attr} must be nonnegative, got {value}")
    if getattr(args, "m_range", None) is not None:
        args.m_lo, args.m_hi = args.m_range
        if args.m_lo < 1 or args.m_hi < args.m_lo:
            parser.error(f"need 1 <= M_LO <= M_HI, got {args.m_lo} {args.m_hi}")
    if getattr(args, "box_factor", None) is not None and args.box_factor < 2:
        parser.error(f"--box-factor must be >= 2, got {args.box_factor}")
    if getattr(args, "m_values", None) is not None and any(m < 1 for m in args.m_values):
        parser.error("every modulus must be >= 1")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except ValueError as e:  # domain errors (e.g. beyond the input cap)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
