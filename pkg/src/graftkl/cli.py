"""Command-line front end.

Usage: ``graftkl COMMAND FILE [options]`` where FILE is a graft document
(``-`` reads standard input).  Results go to standard output as JSON,
diagnostics to standard error.  Exit status: 0 success, 1 usage or parse
error, 2 a verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from .distance import dist, distance_table
from .errors import GraftError
from .formats import dump_result, emit_drawing, parse_graft, parse_join
from .graph import Graft, sort_vertices
from .joins import allowed_edges, min_join, nu
from .sebo import sebo_decomposition, verify_sebo
from .structure import (
    factor_components,
    is_comb_bipartite,
    kl_classes_of_component,
    kl_partition,
    refinement_report,
)

COMMANDS = ("nu", "min-join", "dist", "allowed", "components", "kl", "sebo", "comb", "refine", "verify")

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


def _edges(graft: Graft, eids):
    g = graft.graph
    return [[g.edge(e).u, g.edge(e).v] for e in sorted(eids)]


def _sets(family):
    return [sort_vertices(s) for s in family]


def run_command(command: str, graft: Graft, options: dict | None = None):
    """Compute ``command`` on ``graft``; returns (result dict, passed flag)."""
    opts = dict(options or {})
    passed = True
    if command == "nu":
        result = {"nu": nu(graft)}
    elif command == "min-join":
        cert = min_join(graft)
        result = {"size": cert.size, "edges": _edges(graft, cert.edges)}
    elif command == "dist":
        src, dst = opts.get("from"), opts.get("to")
        if (src is None) != (dst is None):
            raise UsageError("--from and --to go together")
        if src is not None:
            result = {"from": src, "to": dst, "dist": dist(graft, src, dst)}
        else:
            table = distance_table(graft)
            result = {"distances": [[x, y, d] for (x, y), d in table.entries.items() if x != y]}
    elif command == "allowed":
        result = {"edges": _edges(graft, allowed_edges(graft))}
    elif command == "components":
        result = {"components": [
            {"vertices": sort_vertices(h.vertices), "allowed_edges": _edges(graft, h.allowed)}
            for h in factor_components(graft)
        ]}
    elif command == "kl":
        part = kl_partition(graft)
        result = {
            "classes": part.as_lists(),
            "by_component": [
                {"component": sort_vertices(h.vertices),
                 "classes": _sets(kl_classes_of_component(part, h))}
                for h in part.components
            ],
        }
    elif command == "sebo":
        root = opts.get("root")
        if root is None:
            raise UsageError("sebo needs --root")
        if root not in graft.graph:
            raise UsageError(f"root {root!r} is not a vertex")
        join = opts.get("join")
        if join is None:
            join = min_join(graft).edges
        d = sebo_decomposition(graft, join, root)
        report = verify_sebo(d)
        passed = all(c.passed for c in report)
        result = {
            "root": root,
            "join": _edges(graft, d.join),
            "level0": sort_vertices(d.level0),
            "negative": sort_vertices(d.negative),
            "core": sort_vertices(d.core),
            "negative_components": [
                {"block": k.block, "vertices": sort_vertices(k.vertices),
                 "anchor": k.anchor, "partner": k.partner}
                for k in d.components
            ],
            "contracted": {
                "vertices": sort_vertices(d.contracted.vertices),
                "edges": [[e.u, e.v] for e in d.contracted.edges],
                "terminals": sort_vertices(d.contracted_terminals),
            },
            "checks": [c._asdict() for c in report],
        }
    elif command == "comb":
        views = is_comb_bipartite(graft)
        result = {
            "comb_bipartite": bool(views),
            "views": [{"spine": sort_vertices(v.spine), "tooth": sort_vertices(v.tooth)}
                      for v in views],
        }
    elif command == "refine":
        result = {"components": [
            {"component": sort_vertices(e.component.vertices),
             "in_graft": _sets(e.in_graft), "standalone": _sets(e.standalone),
             "refines": e.refines, "proper": e.proper}
            for e in refinement_report(graft)
        ]}
        passed = all(e.refines for e in refinement_report(graft))
    elif command == "verify":
        max_n = opts.get("max_n", 10)
        if len(graft.vertices) > max_n:
            raise UsageError(f"{len(graft.vertices)} vertices exceeds --max-n {max_n}")
        budget = checks.Budget(opts.get("max_pairs"), opts.get("seed", 0))
        outcome = checks.run_checks(graft, budget=budget)
        passed = not any(outcome.values())
        result = {
            "passed": passed,
            "checks": [{"name": k, "passed": not v, "failures": v} for k, v in outcome.items()],
        }
    else:
        raise UsageError(f"unknown command {command!r}")
    return {"command": command, **result}, passed


def drawing_for(command: str, graft: Graft, options: dict) -> str:
    allowed = allowed_edges(graft)
    if command == "sebo":
        join = options.get("join")
        if join is None:
            join = min_join(graft).edges
        d = sebo_decomposition(graft, join, options["root"])
        return emit_drawing(graft, allowed, decomposition=d)
    return emit_drawing(graft, allowed, partition=kl_partition(graft).classes)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vertex(token: str):
    return int(token) if token.lstrip("-").isdigit() else token


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graftkl", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="graft document, or - for standard input")
    p.add_argument("--root", type=_vertex)
    p.add_argument("--from", dest="src", type=_vertex)
    p.add_argument("--to", dest="dst", type=_vertex)
    p.add_argument("--join", help="join file, one edge per line")
    p.add_argument("--draw", help="write a DOT drawing to this path")
    p.add_argument("--max-n", type=int, default=10, help="vertex bound for oracle checks")
    p.add_argument("--max-pairs", type=int, default=None,
                   help="sample at most this many (join, root) pairs in verify")
    p.add_argument("--seed", type=int, default=0)
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        graft = parse_graft(_read(args.file))
        options = {"from": args.src, "to": args.dst, "root": args.root,
                   "max_n": args.max_n, "max_pairs": args.max_pairs, "seed": args.seed}
        if args.join:
            options["join"] = parse_join(_read(args.join), graft.graph)
        result, passed = run_command(args.command, graft, options)
        if args.draw:
            with open(args.draw, "w", encoding="utf-8") as fh:
                fh.write(drawing_for(args.command, graft, options))
    except (GraftError, UsageError, OSError) as exc:
        print(f"graftkl: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(dump_result(result))
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
