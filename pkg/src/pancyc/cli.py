"""Command-line front door.

Subcommands mirror the library layers: ``gen`` emits graph files, ``arcs``
builds and simplifies arc systems, ``engine run`` drives the full witness
pipeline, ``oracle`` answers brute-force queries, and ``verify witness``
re-checks a witness produced earlier (possible on another machine).

All machine output is JSON on stdout (graph files use the plain-text graph
format); diagnostics go to stderr.  Exit codes: 0 for success or a verified
witness, 2 for an Inconclusive engine result, 1 for any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arc_system import build_arc_system, simplify
from .engine import (
    EngineConfig,
    desk_constants,
    paper_constants,
    run_engine,
    witness_from_json,
)
from .errors import PancycError
from .generators import erdos_construction, random_bounded_alpha
from .graph_core import dump_graph, load_graph, mark_problematic
from .oracles import (
    cycle_spectrum,
    has_cycle_through,
    max_independent_set,
    verify_witness,
)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(obj, path: str | None) -> None:
    _write_text(path, json.dumps(obj, sort_keys=True) + "\n")


def _parse_w(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    return frozenset(int(tok) for tok in text.split(",") if tok.strip() != "")


def _load_graph_arg(args) -> "CycledGraph":
    return load_graph(_read_text(args.infile))


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="pancyc", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_io(p, graph_in=True):
        if graph_in:
            p.add_argument("--in", dest="infile", default=None,
                           help="graph file (default: stdin)")
        p.add_argument("--out", dest="outfile", default=None,
                       help="output file (default: stdout)")

    def add_profile(p):
        p.add_argument("--k", type=int, required=True,
                       help="independence bound under test")
        p.add_argument("--w", default=None,
                       help="comma-separated problematic core, e.g. 3,17")
        p.add_argument("--degree-threshold", type=int, default=None,
                       help="override the low-degree cutoff (default 2k)")

    gen = sub.add_parser("gen", help="emit instance graphs").add_subparsers(
        dest="family", required=True)
    g_erdos = gen.add_parser("erdos", help="clique ring missing cycle length k-1")
    g_erdos.add_argument("--k", type=int, required=True)
    add_io(g_erdos, graph_in=False)
    g_rand = gen.add_parser("random", help="seeded clique-cover family")
    g_rand.add_argument("--k", type=int, required=True)
    g_rand.add_argument("--n", type=int, required=True)
    g_rand.add_argument("--seed", type=int, required=True)
    g_rand.add_argument("--rate", type=float, default=0.0)
    add_io(g_rand, graph_in=False)

    arcs = sub.add_parser("arcs", help="arc-system construction").add_subparsers(
        dest="action", required=True)
    for name in ("build", "simplify"):
        a = arcs.add_parser(name)
        add_profile(a)
        a.add_argument("--arc-len", type=int, required=True)
        a.add_argument("--count", type=int, required=True)
        add_io(a)

    eng = sub.add_parser("engine", help="witness engine").add_subparsers(
        dest="action", required=True)
    run = eng.add_parser("run")
    add_profile(run)
    run.add_argument("--p", type=int, required=True, help="recursion level")
    run.add_argument("--x", type=int, required=True, help="target base")
    run.add_argument("--mode", choices=("paper", "desk"), default="desk")
    run.add_argument("--t-override", type=int, nargs="+", default=None,
                     metavar="T", help="desk demands: T_GOOD [T_ASSIGN]")
    run.add_argument("--arc-len", type=int, default=None)
    run.add_argument("--count", type=int, default=None,
                     help="arcs to build (default: as many as fit)")
    run.add_argument("--verbose", action="store_true",
                     help="narrate the trace on stderr")
    add_io(run)

    orc = sub.add_parser("oracle", help="exact brute-force queries").add_subparsers(
        dest="query", required=True)
    o_alpha = orc.add_parser("alpha")
    add_io(o_alpha)
    o_spec = orc.add_parser("spectrum")
    add_io(o_spec)
    o_cyc = orc.add_parser("cycle-through")
    o_cyc.add_argument("--length", type=int, required=True)
    o_cyc.add_argument("--require", default=None,
                       help="comma-separated vertices the cycle must contain")
    add_io(o_cyc)

    ver = sub.add_parser("verify", help="re-check witnesses").add_subparsers(
        dest="target", required=True)
    v_wit = ver.add_parser("witness")
    v_wit.add_argument("--graph", required=True, help="graph file the witness refers to")
    add_profile(v_wit)
    v_wit.add_argument("--in", dest="infile", default=None,
                       help="witness JSON (default: stdin)")
    v_wit.add_argument("--out", dest="outfile", default=None)

    return top


def _cmd_gen(args) -> int:
    if args.family == "erdos":
        g = erdos_construction(args.k)
    else:
        g = random_bounded_alpha(args.k, args.n, args.seed, args.rate)
    _write_text(args.outfile, dump_graph(g))
    return 0


def _cmd_arcs(args) -> int:
    g = _load_graph_arg(args)
    prof = mark_problematic(g, _parse_w(args.w), args.k, args.degree_threshold)
    sys_ = build_arc_system(g, prof, args.arc_len, args.count)
    if args.action == "build":
        out = sys_.json_dict()
        out["count"] = sys_.size
        _emit_json(out, args.outfile)
        return 0
    res = simplify(sys_)
    if res.kind == "contradicting":
        _emit_json({"kind": "contradicting",
                    "witness": res.witness.json_dict(kind="contradicting")},
                   args.outfile)
    else:
        _emit_json({"kind": "simple", "system": res.system.json_dict(),
                    "colors_used": res.colors_used,
                    "events": [dict(e) for e in res.events]},
                   args.outfile)
    return 0


def _cmd_engine(args) -> int:
    g = _load_graph_arg(args)
    if args.mode == "paper":
        if args.t_override:
            raise PancycError("--t-override applies to desk mode only")
        consts = paper_constants(args.p, args.x)
    else:
        ts = args.t_override or [1]
        t_good = ts[0]
        t_assign = ts[1] if len(ts) > 1 else ts[0]
        consts = desk_constants(args.p, args.x, t_good=t_good, t_assign=t_assign)
    arc_len = args.arc_len if args.arc_len is not None else max(1, (args.k + 1) // 2)
    cfg = EngineConfig(constants=consts, arc_len=arc_len, want=args.count,
                       degree_threshold=args.degree_threshold)
    wit = run_engine(g, _parse_w(args.w), args.k, cfg)
    if args.verbose:
        for ev in wit.trace:
            print("  " + ", ".join(f"{k}={v}" for k, v in ev.items()),
                  file=sys.stderr)
    _emit_json(wit.json_dict(), args.outfile)
    return 2 if wit.kind == "inconclusive" else 0


def _cmd_oracle(args) -> int:
    g = _load_graph_arg(args)
    if args.query == "alpha":
        best = max_independent_set(g)
        _emit_json({"alpha": len(best), "vertices": sorted(best)}, args.outfile)
    elif args.query == "spectrum":
        _emit_json(cycle_spectrum(g).json_list(), args.outfile)
    else:
        req = _parse_w(args.require)
        found = has_cycle_through(g, args.length, req)
        if found is None:
            _emit_json({"found": False, "length": args.length}, args.outfile)
        else:
            _emit_json({"found": True, "cycle": list(found.cycle),
                        "length": found.length}, args.outfile)
    return 0


def _cmd_verify(args) -> int:
    g = load_graph(_read_text(args.graph))
    prof = mark_problematic(g, _parse_w(args.w), args.k, args.degree_threshold)
    wit = witness_from_json(json.loads(_read_text(args.infile)))
    ok = verify_witness(g, prof, wit)
    _emit_json({"valid": ok, "kind": wit.kind}, args.outfile)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "arcs":
            return _cmd_arcs(args)
        if args.command == "engine":
            return _cmd_engine(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise PancycError(f"unknown command {args.command!r}")
    except PancycError as err:
        print(f"pancyc: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"pancyc: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
