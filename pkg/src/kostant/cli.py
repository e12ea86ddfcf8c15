"""Command-line surface: every capability, scriptable and deterministic.

Subcommands: ``roots``, ``play``, ``graph``, ``dfa``, ``syt``, ``mukai``,
``verify`` and ``serve``.  Exit code 0 on success, 1 when a verification
sweep finds a counterexample (printed to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify as verify_mod
from .automaton import build_dfa
from .diagram import DiagramError, DynkinDiagram, catalog_diagram, diagram_from_json
from .game import (
    classical_game,
    modified_game,
    play,
    reachable_graph,
    trace_dict,
)
from .mukai import check_mukai_consequence, check_strong_inequality, parabolic_datum, sweep
from .roots import positive_coroots, positive_roots
from .tableaux import (
    StandardTableau,
    count_syt,
    enumerate_standard_tableaux,
    fill_tableau,
    sequence_of_tableau,
)

__all__ = ["main", "build_parser"]


def _int_list(text: str) -> list[int]:
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _load_diagram(args) -> DynkinDiagram:
    if getattr(args, "diagram_file", None):
        with open(args.diagram_file, "r", encoding="utf-8") as fh:
            return diagram_from_json(fh.read())
    if getattr(args, "type", None):
        label = args.type
        family, rank = label[0], label[1:]
        if not rank.isdigit():
            raise DiagramError(f"cannot parse catalog label {label!r}")
        return catalog_diagram(family, int(rank))
    raise DiagramError("give a diagram with --type or --diagram-file")


def _active_set(args, n: int) -> frozenset[int]:
    active = getattr(args, "active", None)
    inactive = getattr(args, "inactive", None)
    if active is not None and inactive is not None:
        raise DiagramError("give --active or --inactive, not both")
    if active is not None:
        return frozenset(_int_list(active))
    if inactive is not None:
        return frozenset(range(1, n + 1)) - set(_int_list(inactive))
    raise DiagramError("give the active set with --active or --inactive")


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_roots(args) -> int:
    diagram = _load_diagram(args)
    roots = positive_coroots(diagram) if args.coroots else positive_roots(diagram)
    if args.emit == "json":
        _emit(args, json.dumps([list(r) for r in roots]))
    else:
        kind = "coroots" if args.coroots else "roots"
        lines = [
            f"{diagram.label}  {diagram.ascii_art()}",
            f"{len(roots)} positive {kind}:",
        ]
        lines += ["  (" + ", ".join(str(c) for c in r) + ")" for r in roots]
        _emit(args, "\n".join(lines))
    return 0


def _game_spec(args):
    diagram = _load_diagram(args)
    if getattr(args, "initial", None) is not None:
        return classical_game(diagram, _int_list(args.initial), args.steps)
    return modified_game(diagram, _active_set(args, diagram.n), args.steps)


def _cmd_play(args) -> int:
    spec = _game_spec(args)
    result = play(spec, strategy=args.strategy, seed=args.seed, verify=True)
    if args.emit == "json":
        _emit(args, json.dumps(trace_dict(spec, result), sort_keys=True))
        return 0
    lines = []
    for step, (v, c) in enumerate(zip(result.moves, result.configs[1:]), start=1):
        lines.append(f"step {step}: fire {v} -> ({', '.join(map(str, c))})")
    if result.diverged:
        lines.append(f"no terminal state after {len(result.moves)} moves (diverged)")
    else:
        lines.append(f"terminal: ({', '.join(map(str, result.final))})")
    _emit(args, "\n".join(lines))
    return 0


def _cmd_graph(args) -> int:
    spec = _game_spec(args)
    graph = reachable_graph(spec, node_cap=args.node_cap)
    if args.emit == "dot":
        _emit(args, graph.to_dot())
    else:
        _emit(args, json.dumps(graph.to_json_dict(), sort_keys=True))
    return 0


def _cmd_dfa(args) -> int:
    diagram = _load_diagram(args)
    dfa = build_dfa(diagram, _active_set(args, diagram.n))
    if args.minimize:
        dfa = dfa.minimize()
    if args.emit == "dot":
        _emit(args, dfa.to_dot())
    elif args.emit == "json":
        _emit(args, dfa.to_json())
    else:
        language = dfa.enumerate_language(args.max_len)
        lines = []
        for length in sorted(language):
            for word in language[length]:
                lines.append("".join(f"s{i}" for i in word) if word else "<empty>")
        _emit(args, "\n".join(lines))
    return 0


def _parse_tableau(text: str) -> StandardTableau:
    rows = tuple(
        tuple(int(x) for x in row.split(",")) for row in text.split(";") if row
    )
    return StandardTableau(rows)


def _cmd_syt(args) -> int:
    if args.count is not None:
        _emit(args, str(count_syt(tuple(_int_list(args.count)))))
        return 0
    if args.list is not None:
        shape = tuple(_int_list(args.list))
        out = [t.to_json_dict() for t in enumerate_standard_tableaux(shape)]
        _emit(args, json.dumps(out))
        return 0
    if args.seq is not None:
        tableau = fill_tableau(_int_list(args.seq), args.n, args.k)
        _emit(args, tableau.render())
        return 0
    if args.tableau is not None:
        tableau = _parse_tableau(args.tableau)
        moves = sequence_of_tableau(tableau, args.n, args.k)
        _emit(args, ",".join(str(v) for v in moves))
        return 0
    raise DiagramError("give one of --seq, --tableau, --count, --list")


def _cmd_mukai(args) -> int:
    if args.sweep:
        report = sweep(args.max_rank)
        _emit(args, report.to_csv())
        if report.violations:
            sys.stderr.write(f"{len(report.violations)} violations\n")
            return 1
        return 0
    diagram = _load_diagram(args)
    datum = parabolic_datum(diagram, set(_int_list(args.delta_p or "")))
    strong = check_strong_inequality(datum)
    consequence = check_mukai_consequence(datum)
    _emit(
        args,
        json.dumps(
            {
                "label": diagram.label,
                "delta_p": sorted(datum.delta_p),
                "picard": datum.picard,
                "dimension": datum.dimension,
                "n_beta": {str(k): v for k, v in sorted(datum.n_beta.items())},
                "index_gcd": datum.index_gcd,
                "strong": {"lhs": strong.lhs, "rhs": strong.rhs, "holds": strong.holds},
                "mukai": {
                    "lhs": consequence.lhs,
                    "rhs": consequence.rhs,
                    "holds": consequence.holds,
                },
            },
            sort_keys=True,
        ),
    )
    return 0


def _cmd_verify(args) -> int:
    sweeps = {
        "bijection": lambda: verify_mod.bijection_sweep(args.max_rank),
        "root-counting": lambda: verify_mod.root_counting_sweep(args.max_rank),
        "dfa-language": lambda: verify_mod.dfa_language_sweep(args.max_rank),
        "syt-bijection": lambda: verify_mod.syt_bijection_sweep(args.max_n),
    }
    outcome = sweeps[args.target]()
    print(outcome.summary())
    if not outcome.ok:
        for failure in outcome.failures:
            sys.stderr.write(failure + "\n")
        return 1
    return 0


def _cmd_serve(args) -> int:
    import os

    import uvicorn

    from .service import create_app

    static = args.static
    if static is None and os.path.isfile(
        os.path.join("frontend", "index.html")
    ):
        static = "frontend"
    app = create_app(
        idle_timeout=args.idle_timeout, log_path=args.log, static_dir=static
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kostant",
        description="chip-firing games on Dynkin diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_diagram_flags(p):
        p.add_argument("--type", help="catalog label such as A2, F4")
        p.add_argument("--diagram-file", help="path to a diagram JSON file")

    def add_active_flags(p):
        p.add_argument("--active", help="active vertices, e.g. 1,3")
        p.add_argument("--inactive", help="inactive vertices (the complement)")

    p = sub.add_parser("roots", help="list positive roots or coroots")
    add_diagram_flags(p)
    p.add_argument("--coroots", action="store_true")
    p.add_argument("--emit", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("play", help="play one game to termination or the cap")
    add_diagram_flags(p)
    add_active_flags(p)
    p.add_argument("--initial", help="classical start, e.g. 1,0,0,0")
    p.add_argument("--strategy", choices=["lowest", "highest", "random"], default="lowest")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=10_000, help="step cap")
    p.add_argument("--emit", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("graph", help="reachable configuration graph")
    add_diagram_flags(p)
    add_active_flags(p)
    p.add_argument("--initial")
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--node-cap", type=int, default=1_000_000)
    p.add_argument("--emit", choices=["dot", "json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("dfa", help="reduced-word automaton")
    add_diagram_flags(p)
    add_active_flags(p)
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--max-len", type=int, default=20)
    p.add_argument("--emit", choices=["dot", "json", "words"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_dfa)

    p = sub.add_parser("syt", help="firing sequences and standard tableaux")
    p.add_argument("--n", type=int, help="symmetric group size")
    p.add_argument("--k", type=int, help="source vertex")
    p.add_argument("--seq", help="firing sequence, e.g. 2,1,3,2")
    p.add_argument("--tableau", help="rows as 1,3;2,4")
    p.add_argument("--count", help="shape to count, e.g. 2,2")
    p.add_argument("--list", help="shape to enumerate")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_syt)

    p = sub.add_parser("mukai", help="parabolic datum or full sweep")
    add_diagram_flags(p)
    p.add_argument("--delta-p", help="subset kept in the parabolic, e.g. 2,3")
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_mukai)

    p = sub.add_parser("verify", help="exhaustive two-route verification sweeps")
    p.add_argument(
        "target",
        choices=["bijection", "root-counting", "dfa-language", "syt-bijection"],
    )
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--idle-timeout", type=float, default=3600.0)
    p.add_argument("--log", help="append-only JSON-lines event log")
    p.add_argument("--static", help="directory with the browser board assets")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
