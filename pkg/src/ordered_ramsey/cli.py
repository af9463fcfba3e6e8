"""Command-line interface: matches, exact solving, bounds, compilation, server.

Exit codes: 0 success / win recorded, 2 turn cap reached, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import solver
from .board import MatchUnfinished, export_transcript, run_match
from .compiler import (
    compute_restriction_bound,
    enumerate_game_tree,
    replay_compiled,
    tree_to_json_dict,
)
from .graphs import GraphSpecError, parse_graph_spec, two_sided_star
from .strategies import BUILDER_TOKENS, PAINTER_TOKENS, make_builder, make_painter

EXIT_OK = 0
EXIT_CAP = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def _parse_spec(text: str):
    try:
        return parse_graph_spec(text)
    except GraphSpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.exit(EXIT_USAGE)


def _emit(payload: dict, as_json: bool, human_lines: list[str]):
    if as_json:
        print(json.dumps(payload))
    else:
        for line in human_lines:
            print(line)


def cmd_match(args) -> int:
    red = _parse_spec(args.red)
    blue = _parse_spec(args.blue)
    try:
        builder = make_builder(args.builder, red, blue, seed=args.seed,
                               board=args.board)
        painter = make_painter(args.painter, seed=args.seed)
    except GraphSpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    code = EXIT_OK
    try:
        transcript = run_match(red, blue, builder, painter, args.cap,
                               red_spec=args.red, blue_spec=args.blue,
                               seed=args.seed)
    except MatchUnfinished as exc:
        transcript = exc.transcript
        code = EXIT_CAP
    reports = bounds_mod.applicable_bounds(red, blue)
    winner = {"r": "red", "b": "blue", None: "nobody"}[transcript.winner]
    lines = [f"{winner} wins in {transcript.turns}" if transcript.winner
             else f"turn cap {args.cap} reached after {transcript.turns} turns"]
    for rep in reports:
        rel = {"lower": ">=", "upper": "<="}.get(rep.kind)
        if rel:
            lines.append(f"  bound {rep.name}: turns {rel} {rep.integer_view}")
    payload = {
        "transcript": json.loads(transcript.to_json()),
        "bounds": [r.as_dict() for r in reports],
    }
    _emit(payload, args.json, lines)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(export_transcript(transcript))
    return code


def cmd_solve(args) -> int:
    red = _parse_spec(args.red)
    blue = _parse_spec(args.blue)
    try:
        result = solver.solve_restricted(red, blue, args.board, budget=args.budget)
    except solver.BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    value = "unbounded" if result.value == solver.INFINITE else int(result.value)
    pv = " ".join(f"{u}-{v}:{c}" for u, v, c in result.principal_variation)
    _emit(
        {"value": value, "principal_variation": result.principal_variation,
         "nodes": result.nodes, "board": result.board_size},
        args.json,
        [f"value = {value} on board [{args.board}] ({result.nodes} nodes)",
         f"principal variation: {pv or '(none)'}"],
    )
    return EXIT_OK


def cmd_bounds(args) -> int:
    red = _parse_spec(args.red)
    blue = _parse_spec(args.blue)
    reports = bounds_mod.applicable_bounds(red, blue)
    for arm in range(2, max(red.n, blue.n)):
        if red == blue == two_sided_star(arm, arm):
            reports.extend(bounds_mod.sym_star_reference(arm))
    lines = []
    for rep in reports:
        lines.append(f"{rep.kind:9s} {rep.name} = {rep.value} "
                     f"(integer view {rep.integer_view}) [{rep.cite}]")
    _emit({"bounds": [r.as_dict() for r in reports]}, args.json, lines)
    return EXIT_OK


def cmd_ramsey(args) -> int:
    red = _parse_spec(args.red)
    blue = _parse_spec(args.blue)
    try:
        value = solver.ordered_ramsey_number(red, blue, args.max_board)
    except solver.RamseyNotFound as exc:
        sys.stderr.write(f"not found: {exc}\n")
        return 1
    _emit({"ramsey": value}, args.json, [str(value)])
    return EXIT_OK


def cmd_compile(args) -> int:
    red = _parse_spec(args.red)
    blue = _parse_spec(args.blue)
    try:
        factory = lambda: make_builder(args.builder, red, blue, seed=args.seed,
                                       board=args.board)
        tree = enumerate_game_tree(factory, red, blue, args.depth_cap)
    except GraphSpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    size, assignment = compute_restriction_bound(tree)
    replay_compiled(tree)  # raises if the compiled strategy diverges
    lines = [f"N = {size} ({len(tree.leaves())} branches, depth {tree.depth()}, "
             "compiled replay verified)"]
    payload = {"board": size, "branches": len(tree.leaves()),
               "depth": tree.depth()}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(tree_to_json_dict(tree, assignment), fh)
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ordered-ramsey",
                     description="online ordered Ramsey game workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def targets(p):
        p.add_argument("--red", required=True, help="red target graph spec")
        p.add_argument("--blue", required=True, help="blue target graph spec")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("match", help="run one builder-vs-painter game")
    targets(p)
    p.add_argument("--builder", required=True, choices=BUILDER_TOKENS)
    p.add_argument("--painter", required=True, choices=PAINTER_TOKENS)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cap", type=int, default=10000, help="turn cap")
    p.add_argument("--board", type=int, default=None,
                   help="board size for builder:minimax")
    p.add_argument("--out", default=None, help="write the JSON transcript here")
    p.set_defaults(fn=cmd_match)

    p = sub.add_parser("solve", help="exact restricted game value")
    targets(p)
    p.add_argument("--board", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("bounds", help="closed-form bound reports")
    targets(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("ramsey", help="exact ordered Ramsey number r_<")
    targets(p)
    p.add_argument("--max-board", type=int, required=True)
    p.set_defaults(fn=cmd_ramsey)

    p = sub.add_parser("compile", help="enumerate and compile a builder strategy")
    targets(p)
    p.add_argument("--builder", required=True, choices=BUILDER_TOKENS)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--board", type=int, default=None)
    p.add_argument("--depth-cap", type=int, default=12)
    p.add_argument("--out", default=None, help="write the JSON decision tree here")
    p.set_defaults(fn=cmd_compile)

    p = sub.add_parser("serve", help="run the play-session server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8023)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
