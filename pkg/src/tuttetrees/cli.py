"""Command-line front door.

Machine-readable JSON goes to stdout (one record per line); human summaries go
to stderr.  Exit codes: 0 holds/success, 1 fails, 2 usage error, 3
inconclusive, 4 malformed input data, 5 unreadable file.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import Graph, GraphError, SpanningTree
from .generators import named, named_graphs, g_n
from .harness import (
    THEOREM_IDS,
    graph_to_dot,
    parse_graph6,
    replay_bundle,
    verify_theorem,
    write_graph6,
)
from .nonsep import FAILS, HOLDS, INCONCLUSIVE, verify_fundamental_tutte_tree, verify_tutte_tree
from .planar import embedding_to_dot, planar_embed
from .search import (
    SearchConfig,
    check_spg_conditions,
    decide_planar_tutte,
    find_fundamental_tutte_tree,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    find_tutte_tree,
)
from .structure import block_cut_tree, h_bridges, is_series_parallel, two_vertex_cuts

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_BAD_DATA = 4
EXIT_UNREADABLE = 5

_VERDICT_EXIT = {HOLDS: EXIT_HOLDS, FAILS: EXIT_FAILS, INCONCLUSIVE: EXIT_INCONCLUSIVE}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_graph(path: str) -> Graph:
    if path == "-":
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
        if not lines:
            raise CliError("no graph6 data on stdin", EXIT_BAD_DATA)
        text = lines[0]
    else:
        try:
            with open(path) as fh:
                lines = [ln.strip() for ln in fh if ln.strip()]
        except OSError as e:
            raise CliError(f"cannot read {path}: {e}", EXIT_UNREADABLE)
        if not lines:
            raise CliError(f"{path} contains no graph6 data", EXIT_BAD_DATA)
        text = lines[0]
    try:
        return parse_graph6(text)
    except GraphError as e:
        raise CliError(f"malformed graph6 input: {e}", EXIT_BAD_DATA)


def _parse_tree(g: Graph, spec: str) -> SpanningTree:
    edges = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        bits = part.split("-")
        if len(bits) != 2:
            raise CliError(f"malformed tree edge {part!r} (want u-v)", EXIT_BAD_DATA)
        try:
            edges.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise CliError(f"malformed tree edge {part!r}", EXIT_BAD_DATA)
    try:
        return SpanningTree(g, edges)
    except GraphError as e:
        raise CliError(f"invalid spanning tree: {e}", EXIT_BAD_DATA)


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _cfg(args) -> SearchConfig:
    return SearchConfig(budget=getattr(args, "budget", 0) or 0)


def _cmd_check(args) -> int:
    g = _read_graph(args.graph)
    t = _parse_tree(g, args.tree)
    try:
        cert = (
            verify_fundamental_tutte_tree(g, t)
            if args.fundamental
            else verify_tutte_tree(g, t)
        )
    except GraphError as e:
        raise CliError(str(e), EXIT_BAD_DATA)
    _emit({"command": "check", **cert.to_jsonable()})
    print(f"verdict: {cert.verdict}", file=sys.stderr)
    return _VERDICT_EXIT[cert.verdict]


def _cmd_find(args) -> int:
    g = _read_graph(args.graph)
    cfg = _cfg(args)
    endpoints = None
    if args.endpoints:
        try:
            endpoints = tuple(int(x) for x in args.endpoints.split(","))
        except ValueError:
            raise CliError(f"malformed endpoints {args.endpoints!r}", EXIT_BAD_DATA)
    try:
        if args.what == "tutte":
            cert = find_tutte_tree(g, cfg)
        elif args.what == "ftt":
            cert = find_fundamental_tutte_tree(g, cfg)
        elif args.what == "hamcycle":
            cert = find_hamiltonian_cycle(g, cfg)
        else:
            cert = find_hamiltonian_path(g, endpoints, cfg)
    except GraphError as e:
        raise CliError(str(e), EXIT_BAD_DATA)
    _emit({"command": "find", "what": args.what, **cert.to_jsonable()})
    print(f"verdict: {cert.verdict}", file=sys.stderr)
    return _VERDICT_EXIT[cert.verdict]


def _cmd_decide(args) -> int:
    g = _read_graph(args.graph)
    try:
        cert = decide_planar_tutte(g, _cfg(args))
    except GraphError as e:
        raise CliError(str(e), EXIT_BAD_DATA)
    trace = None
    if cert.verdict == HOLDS:
        t = SpanningTree(g, cert.witness.edges)
        if len(t.leaves) == 2:
            trace = {"route": "hamiltonian-cycle"}
        else:
            trace = {"route": "triangle-leaves", "triangle": list(t.leaves)}
    _emit({"command": "decide", "trace": trace, **cert.to_jsonable()})
    print(f"verdict: {cert.verdict}", file=sys.stderr)
    return _VERDICT_EXIT[cert.verdict]


def _cmd_structure(args) -> int:
    g = _read_graph(args.graph)
    try:
        if args.what == "bridges":
            if not args.cut:
                raise CliError("bridges needs --cut u,v", EXIT_USAGE)
            u, v = (int(x) for x in args.cut.split(","))
            dec = h_bridges(g, [u, v])
            out = {
                "command": "structure",
                "what": "bridges",
                "cut": [u, v],
                "bridges": [
                    {
                        "vertices": list(b.vertices),
                        "attachments": list(b.attachments),
                        "edges": [list(e) for e in b.edges],
                        "trivial": b.trivial,
                    }
                    for b in dec.bridges
                ],
            }
        elif args.what == "blocks":
            bct = block_cut_tree(g)
            out = {
                "command": "structure",
                "what": "blocks",
                "cut_vertices": list(bct.cut_vertices),
                "blocks": [
                    {
                        "vertices": list(b.vertices),
                        "edges": [list(e) for e in b.edges],
                        "nontrivial": b.nontrivial,
                        "is_leaf": b.is_leaf,
                    }
                    for b in bct.blocks
                ],
            }
        elif args.what == "sp-check":
            sp = is_series_parallel(g)
            out = {"command": "structure", "what": "sp-check", "series_parallel": sp}
            if sp and g.n >= 3 and not two_vertex_cuts(g) or sp:
                try:
                    rep = check_spg_conditions(g)
                    out["spg_conditions"] = {
                        "verdict": rep.verdict,
                        "records": [
                            {
                                "cut": list(r.cut),
                                "bridge_count": r.bridge_count,
                                "ham_uv_path": list(r.ham_uv_path),
                                "two_edge_connected": list(r.two_edge_connected),
                                "i": r.cond_i,
                                "ii": r.cond_ii,
                                "iii": r.cond_iii,
                            }
                            for r in rep.records
                        ],
                    }
                except GraphError:
                    pass  # not 2-connected: plain recognition answer only
        else:  # two-cuts
            out = {
                "command": "structure",
                "what": "two-cuts",
                "cuts": [list(c) for c in two_vertex_cuts(g)],
            }
    except (GraphError, ValueError) as e:
        raise CliError(str(e), EXIT_BAD_DATA)
    _emit(out)
    return EXIT_HOLDS


def _cmd_gen(args) -> int:
    name = args.name
    try:
        if name.startswith("gn:"):
            g = g_n(int(name[3:]))
        else:
            g = named(name)
    except (GraphError, ValueError) as e:
        raise CliError(str(e), EXIT_USAGE)
    line = write_graph6(g)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(line + "\n")
        except OSError as e:
            raise CliError(f"cannot write {args.out}: {e}", EXIT_UNREADABLE)
    else:
        print(line)
    if args.dot:
        emb = planar_embed(g) if g.n else None
        text = embedding_to_dot(emb) if emb is not None else graph_to_dot(g)
        try:
            with open(args.dot, "w") as fh:
                fh.write(text)
        except OSError as e:
            raise CliError(f"cannot write {args.dot}: {e}", EXIT_UNREADABLE)
    print(f"{name}: n={g.n} m={g.m}", file=sys.stderr)
    return EXIT_HOLDS


def _cmd_verify(args) -> int:
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    for tid in ids:
        if tid not in THEOREM_IDS:
            raise CliError(
                f"unknown theorem {tid!r}; known: {', '.join(THEOREM_IDS)}", EXIT_USAGE
            )
    try:
        open(args.corpus).close()
    except OSError as e:
        raise CliError(f"cannot read {args.corpus}: {e}", EXIT_UNREADABLE)
    reports = []
    for tid in ids:
        def progress(done, total, tid=tid):
            if done % 500 == 0 or done == total:
                print(f"{tid}: {done}/{total}", file=sys.stderr)

        rep = verify_theorem(
            tid, args.corpus, cap=args.cap, jobs=args.jobs, progress=progress
        )
        reports.append(rep)
        _emit(rep.to_jsonable())
        status = "ok" if rep.ok else f"{len(rep.counterexamples)} COUNTEREXAMPLES"
        print(
            f"{tid}: scanned {rep.scanned}, qualified {rep.qualified}, {status}",
            file=sys.stderr,
        )
    if args.report:
        from .report import emit_report

        written = emit_report(reports, args.report, figures_dir=args.figures)
        print("wrote " + ", ".join(written), file=sys.stderr)
    return EXIT_HOLDS if all(r.ok for r in reports) else EXIT_FAILS


def _cmd_replay(args) -> int:
    try:
        with open(args.witness) as fh:
            bundle = json.load(fh)
    except OSError as e:
        raise CliError(f"cannot read {args.witness}: {e}", EXIT_UNREADABLE)
    except json.JSONDecodeError as e:
        raise CliError(f"malformed witness bundle: {e}", EXIT_BAD_DATA)
    try:
        result = replay_bundle(bundle)
    except (GraphError, KeyError) as e:
        raise CliError(f"malformed witness bundle: {e}", EXIT_BAD_DATA)
    _emit({"command": "replay", **result})
    print(
        "counterexample reproduced" if result["reproduced"] else "NOT reproduced",
        file=sys.stderr,
    )
    return EXIT_HOLDS if result["reproduced"] else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tuttetrees",
        description="Decide, construct and certify spanning trees with nonseparating paths and fundamental cycles.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify a given spanning tree")
    csub = c.add_subparsers(dest="what", required=True)
    ct = csub.add_parser("tree")
    ct.add_argument("--graph", required=True, help="graph6 file or - for stdin")
    ct.add_argument("--tree", required=True, help='edge list "u-v,u-v,..."')
    ct.add_argument("--fundamental", action="store_true", help="check fundamental cycles instead of tree paths")
    ct.set_defaults(func=_cmd_check)

    f = sub.add_parser("find", help="exhaustive searches with certificates")
    f.add_argument("what", choices=["tutte", "ftt", "hamcycle", "hampath"])
    f.add_argument("--graph", required=True)
    f.add_argument("--budget", type=int, default=0)
    f.add_argument("--endpoints", help="u,v (hampath only)")
    f.set_defaults(func=_cmd_find)

    d = sub.add_parser("decide", help="planar characterization procedure")
    dsub = d.add_subparsers(dest="what", required=True)
    dp = dsub.add_parser("planar-tutte")
    dp.add_argument("--graph", required=True)
    dp.add_argument("--budget", type=int, default=0)
    dp.set_defaults(func=_cmd_decide)

    s = sub.add_parser("structure", help="decomposition dumps")
    s.add_argument("what", choices=["bridges", "blocks", "sp-check", "two-cuts"])
    s.add_argument("--graph", required=True)
    s.add_argument("--cut", help="u,v (bridges only)")
    s.set_defaults(func=_cmd_structure)

    ggen = sub.add_parser("gen", help="named graph generators")
    ggen.add_argument("name", help=f"one of {', '.join(named_graphs())} or gn:N")
    ggen.add_argument("--out", help="write graph6 here instead of stdout")
    ggen.add_argument("--dot", help="also write a DOT rendering here")
    ggen.set_defaults(func=_cmd_gen)

    v = sub.add_parser("verify", help="replay a claim over a corpus")
    v.add_argument("--theorem", required=True, help=f"{', '.join(THEOREM_IDS)} or all")
    v.add_argument("--corpus", required=True, help="graph6 file, one graph per line")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--cap", type=int, default=10**7)
    v.add_argument("--report", help="write a JSON report (CSV written alongside)")
    v.add_argument("--figures", help="directory for rendered PNG figures")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("replay", help="re-check a witness bundle")
    r.add_argument("--witness", required=True, help="bundle JSON file")
    r.set_defaults(func=_cmd_replay)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except BrokenPipeError:
        return EXIT_HOLDS


if __name__ == "__main__":
    sys.exit(main())
