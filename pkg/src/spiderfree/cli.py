"""Command-line entry point: ``spiderfree <subcommand> ...``.

Exit codes: 0 success, 1 decision "NO", 2 usage or validation error,
3 capacity error. With ``--json`` every report (and every error) is a single
JSON object with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .blocks import bridges_and_blocks, cactus_classify
from .cnf import parse_cnf
from .errors import CapacityError, GraphParseError, SpiderfreeError, ValidationError
from .generators import KINDS, generate
from .graph import read_graph, write_graph
from .hardness import reduce, verify_reduction
from .ifvs import Outcome, min_ifvs_subcubic
from .meta import PROBLEMS, ProblemKind, check_structure_theorem, classify_h, decompose_ct, solve
from .oracles import OracleCaps, oracle_chromatic, oracle_has_matching_cut, oracle_min_cvc, \
    oracle_min_fvs, oracle_min_ifvs
from .subgraph import SpiderPattern, contains_spider
from .treedepth import TREEDEPTH_CAP

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    json: bool = False
    caps: OracleCaps = field(default_factory=OracleCaps)
    td_cap: int = TREEDEPTH_CAP


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--subset-cap", type=_positive, default=18, help="exhaustive-search vertex cap")
    common.add_argument("--branch-cap", type=_positive, default=80, help="branching-oracle vertex cap")
    common.add_argument("--chromatic-cap", type=_positive, default=18)
    common.add_argument("--matching-cut-cap", type=_positive, default=16)
    common.add_argument("--td-cap", type=_positive, default=TREEDEPTH_CAP, help="exact treedepth cap")

    p = argparse.ArgumentParser(prog="spiderfree", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="solve a problem via the decomposition")
    s.add_argument("problem", choices=PROBLEMS)
    s.add_argument("file")
    s.add_argument("--k", type=int, help="colours for colouring; size budget for fvs/ifvs/cvc")
    s.add_argument("--subcubic", action="store_true", help="ifvs only: run the subcubic algorithm directly")
    s.add_argument("--timings", action="store_true", help="include timings (output no longer deterministic)")

    s = sub.add_parser("analyze", parents=[common], help="decomposition and structure report")
    s.add_argument("file")
    s.add_argument("--q", type=_positive, default=1)
    s.add_argument("--r", type=_positive, default=1)

    s = sub.add_parser("check", parents=[common], help="test for a subdivided-star subgraph")
    s.add_argument("file")
    s.add_argument("--spider", required=True, help="tentacle lengths w,x,y,z")

    s = sub.add_parser("oracle", parents=[common], help="brute-force reference answer")
    s.add_argument("problem", choices=PROBLEMS)
    s.add_argument("file")

    s = sub.add_parser("reduce", parents=[common], help="build the FVS instance of a 2P1N formula")
    s.add_argument("formula")
    s.add_argument("-o", "--output", required=True, help="graph file to write")
    s.add_argument("--sidecar", help="JSON sidecar path (default: <output>.json)")
    s.add_argument("--dot", help="also write a DOT dump of the graph")

    s = sub.add_parser("verify-reduction", parents=[common], help="check the reduction with oracles")
    s.add_argument("formula")

    s = sub.add_parser("gen", parents=[common], help="generate a graph")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("-o", "--output", help="write here instead of stdout")
    s.add_argument("--dot", help="also write a DOT dump of the graph")

    s = sub.add_parser("classify-h", parents=[common], help="complexity of the five problems for pattern H")
    s.add_argument("file")
    return p


def _caps(args) -> OracleCaps:
    return OracleCaps(subset=args.subset_cap, branch=args.branch_cap, chromatic=args.chromatic_cap,
                      matching_cut=args.matching_cut_cap)


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    print(dumps(payload) if cfg.json else text)


def _cmd_solve(args, cfg) -> int:
    g = read_graph(args.file)
    if args.subcubic:
        if args.problem != "ifvs":
            raise ValidationError("--subcubic applies to ifvs only")
        res = min_ifvs_subcubic(g)
        payload = {"problem": "ifvs", "route": "subcubic", **res.to_dict()}
        if res.outcome is Outcome.NO_IFVS_K4:
            _emit(cfg, payload, "NO-IFVS(K4)")
            return EXIT_NO
        ok = args.k is None or res.size <= args.k
        payload["decision"] = ok
        _emit(cfg, payload, f"ifvs size {res.size}: {sorted(res.vertices)}\n"
                            f"degree3Only: {str(res.degree3_only).lower()}")
        return EXIT_OK if ok else EXIT_NO
    rep = solve(ProblemKind(args.problem, args.k), g, caps=cfg.caps)
    payload = rep.to_dict(timings=args.timings)
    lines = [f"problem: {rep.problem}" + (f" (k={rep.k})" if rep.k is not None else "")]
    if rep.value is not None:
        lines.append(f"value: {rep.value}")
    if rep.decision is not None:
        lines.append(f"decision: {'YES' if rep.decision else 'NO'}")
    if rep.witness is not None:
        lines.append(f"witness: {rep.witness}")
    lines += [f"part {r['part']} n={r['n']}: {r['route']}" for r in rep.routes]
    lines += [f"FLAG: {f}" for f in rep.flags]
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_NO if rep.decision is False else EXIT_OK


def _cmd_analyze(args, cfg) -> int:
    g = read_graph(args.file)
    dec = bridges_and_blocks(g)
    payload = {"n": g.n, "m": g.m, "digest": g.digest(), "max_degree": g.max_degree(),
               "connected": g.is_connected(), "bridges": [list(e) for e in dec.bridges],
               "proper_bridges": [list(e) for e in dec.proper_bridges], "cutvertices": dec.cutvertices}
    if g.is_connected():
        payload["cactus_class"] = cactus_classify(g).name
        payload["decomposition"] = decompose_ct(g, cfg.td_cap).to_dict()
        payload["structure"] = check_structure_theorem(g, args.q, args.r, cfg.td_cap).to_dict()
    text = "\n".join(f"{k}: {v}" for k, v in sorted(payload.items()))
    _emit(cfg, payload, text)
    return EXIT_OK


def _cmd_check(args, cfg) -> int:
    g = read_graph(args.file)
    pattern = SpiderPattern.parse(args.spider)
    emb = contains_spider(g, pattern)
    payload = {"pattern": list(pattern.lengths), "free": emb is None,
               "embedding": None if emb is None else {str(k): v for k, v in emb.items()}}
    _emit(cfg, payload, "FREE" if emb is None else f"CONTAINS {pattern}: {emb}")
    return EXIT_OK if emb is None else EXIT_NO


def _cmd_oracle(args, cfg) -> int:
    g = read_graph(args.file)
    caps = cfg.caps
    if args.problem in ("fvs", "ifvs", "cvc"):
        fn = {"fvs": oracle_min_fvs, "ifvs": oracle_min_ifvs, "cvc": oracle_min_cvc}[args.problem]
        res = fn(g, caps=caps)
        payload = {"problem": args.problem, "value": None if res is None else len(res),
                   "witness": None if res is None else sorted(res)}
    elif args.problem == "colouring":
        k, col = oracle_chromatic(g, caps, with_colouring=True)
        payload = {"problem": "colouring", "value": k, "witness": col}
    else:
        cut = oracle_has_matching_cut(g, caps)
        payload = {"problem": "matchingcut", "value": None, "decision": cut is not None,
                   "witness": None if cut is None else [list(e) for e in cut]}
    payload.setdefault("decision", payload["witness"] is not None)
    _emit(cfg, payload, f"{args.problem}: value={payload['value']} witness={payload['witness']}")
    return EXIT_OK if payload["decision"] else EXIT_NO


def _cmd_reduce(args, cfg) -> int:
    phi = parse_cnf(Path(args.formula).read_text())
    red = reduce(phi)
    write_graph(red.graph, args.output)
    side = args.sidecar or args.output + ".json"
    Path(side).write_text(dumps(red.sidecar()) + "\n")
    if args.dot:
        Path(args.dot).write_text(red.graph.to_dot())
    payload = {"output": args.output, "sidecar": side, "n": red.graph.n, "m": red.graph.m,
               "threshold": red.threshold}
    _emit(cfg, payload, f"wrote {args.output} (n={red.graph.n}, m={red.graph.m}, threshold={red.threshold})")
    return EXIT_OK


def _cmd_verify(args, cfg) -> int:
    phi = parse_cnf(Path(args.formula).read_text())
    rep = verify_reduction(phi, cfg.caps)
    d = rep.to_dict()
    _emit(cfg, d, "\n".join(f"{k}: {v}" for k, v in sorted(d.items())))
    return EXIT_OK if rep.ok else EXIT_NO


def _cmd_gen(args, cfg) -> int:
    g = generate(args.kind, *args.params, seed=args.seed)
    if args.output:
        write_graph(g, args.output)
    if args.dot:
        Path(args.dot).write_text(g.to_dot())
    if cfg.json:
        print(dumps({"kind": args.kind, "n": g.n, "m": g.m, "digest": g.digest(),
                     "edges": [list(e) for e in g.sorted_edges()]}))
    elif not args.output:
        sys.stdout.write(g.to_text())
    return EXIT_OK


def _cmd_classify(args, cfg) -> int:
    h = read_graph(args.file)
    res = classify_h(h)
    _emit(cfg, res, "\n".join(f"{k}: {v}" for k, v in res.items()))
    return EXIT_OK


COMMANDS = {"solve": _cmd_solve, "analyze": _cmd_analyze, "check": _cmd_check, "oracle": _cmd_oracle,
            "reduce": _cmd_reduce, "verify-reduction": _cmd_verify, "gen": _cmd_gen,
            "classify-h": _cmd_classify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    cfg = RunConfig(args.command, args.json, _caps(args), args.td_cap)
    try:
        return COMMANDS[args.command](args, cfg)
    except CapacityError as exc:
        code, kind = EXIT_CAPACITY, "capacity"
        err = exc
    except (GraphParseError, ValidationError, SpiderfreeError, OSError) as exc:
        code, kind = EXIT_USAGE, "validation"
        err = exc
    if cfg.json:
        print(dumps({"error": kind, "message": str(err), "exit_code": code}))
    else:
        print(f"error ({kind}): {err}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
