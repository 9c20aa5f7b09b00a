"""Graft documents, join files, structured results and DOT drawings.

A graft document is line oriented::

    graft 1        # optional version header
    v a t          # vertex a, a terminal
    v b            # vertex b
    e a b          # edge ab

Integer-looking ids are read as integers.  Edges get ids 0, 1, ... in
declaration order, so a document round-trips through parse and serialize.
"""

from __future__ import annotations

import json
import re

from .errors import InputError, ParseError
from .graph import Graft, Graph, sort_vertices

FORMAT_VERSION = 1
RESULT_FORMAT = "graftkl-result/1"
_INT = re.compile(r"-?\d+\Z")


def _ident(token: str):
    return int(token) if _INT.match(token) else token


def _tokens(line: str):
    """(column, token) pairs, stopping at a comment."""
    out = []
    for m in re.finditer(r"\S+", line):
        if m.group().startswith("#"):
            break
        out.append((m.start() + 1, m.group()))
    return out


def parse_graft(text: str) -> Graft:
    vertices = {}
    terminals = set()
    edges = []
    pairs = set()
    seen_directive = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]
        args = toks[1:]
        if head == "graft":
            if seen_directive:
                raise ParseError("version header must come first", lineno, col)
            if len(args) != 1 or args[0][1] != str(FORMAT_VERSION):
                raise ParseError(f"unsupported format version (expected {FORMAT_VERSION})",
                                 lineno, args[0][0] if args else col)
            seen_directive = True
            continue
        seen_directive = True
        if head == "v":
            if not args or len(args) > 2:
                raise ParseError("expected 'v <id> [t]'", lineno, col)
            vcol, tok = args[0]
            v = _ident(tok)
            if v in vertices:
                raise ParseError(f"duplicate vertex {tok}", lineno, vcol)
            if len(args) == 2:
                if args[1][1] != "t":
                    raise ParseError(f"unknown vertex marker {args[1][1]!r}", lineno, args[1][0])
                terminals.add(v)
            vertices[v] = lineno
        elif head == "e":
            if len(args) != 2:
                raise ParseError("expected 'e <id> <id>'", lineno, col)
            ends = []
            for ecol, tok in args:
                v = _ident(tok)
                if v not in vertices:
                    raise ParseError(f"undeclared vertex {tok}", lineno, ecol)
                ends.append(v)
            u, v = ends
            if u == v:
                raise ParseError(f"self-loop at {args[0][1]}", lineno, args[1][0])
            if frozenset(ends) in pairs:
                raise ParseError(f"duplicate edge {args[0][1]} {args[1][1]}", lineno, col)
            pairs.add(frozenset(ends))
            edges.append((u, v, len(edges)))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
    graph = Graph(vertices, edges)
    return Graft(graph, frozenset(terminals))


def serialize_graft(graft: Graft) -> str:
    lines = [f"graft {FORMAT_VERSION}"]
    for v in graft.vertices:
        lines.append(f"v {v} t" if v in graft.terminals else f"v {v}")
    for e in sorted(graft.edges, key=lambda e: e.id):
        lines.append(f"e {e.u} {e.v}")
    return "\n".join(lines) + "\n"


def parse_join(text: str, graph: Graph) -> frozenset:
    """Edge ids named by a join file: one ``u v`` (or ``e u v``) per line."""
    out = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        if toks[0][1] == "e":
            toks = toks[1:]
        if len(toks) != 2:
            raise ParseError("expected '<id> <id>'", lineno, toks[0][0] if toks else 1)
        (c1, a), (c2, b) = toks
        u, v = _ident(a), _ident(b)
        for c, x, tok in ((c1, u, a), (c2, v, b)):
            if x not in graph:
                raise ParseError(f"unknown vertex {tok}", lineno, c)
        try:
            out.add(graph.eid(u, v))
        except InputError:
            raise ParseError(f"no edge {a} {b}", lineno, c1) from None
    return frozenset(out)


def dump_result(result: dict) -> str:
    """Stable JSON text; key order is the order the command built it in."""
    return json.dumps({"format": RESULT_FORMAT, **result}, indent=2, ensure_ascii=False) + "\n"


def _dot_id(v) -> str:
    s = str(v).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{s}"'


def emit_drawing(graft: Graft, allowed=frozenset(), partition=None, decomposition=None) -> str:
    """DOT drawing: terminals black, other vertices white, allowed edges thick.

    With ``partition`` each class becomes a gray cluster.  With
    ``decomposition`` the level-0 set of the core and each negative component
    become clusters instead, and the root is drawn with a double circle.
    """
    lines = [
        "graph graft {",
        "  node [shape=circle, style=filled, fontname=Helvetica];",
        "  edge [color=black];",
    ]
    clusters = []
    if partition is not None:
        clusters = [("", sort_vertices(c)) for c in partition]
    elif decomposition is not None:
        d = decomposition
        clusters.append(("level 0", sort_vertices(d.spine)))
        clusters.extend((k.block, sort_vertices(k.vertices)) for k in d.components)
    for k, (label, members) in enumerate(clusters):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append('    style="filled,rounded"; color=gray70; fillcolor=gray88;')
        lines.append(f"    label={_dot_id(label)};")
        lines.append("    " + " ".join(_dot_id(v) + ";" for v in members))
        lines.append("  }")
    root = decomposition.root if decomposition is not None else None
    for v in graft.vertices:
        attrs = (["fillcolor=black", "fontcolor=white"] if v in graft.terminals
                 else ["fillcolor=white", "fontcolor=black"])
        if v == root:
            attrs.append("shape=doublecircle")
        lines.append(f"  {_dot_id(v)} [{', '.join(attrs)}];")
    for e in graft.edges:
        style = "penwidth=3" if e.id in allowed else "penwidth=1"
        lines.append(f"  {_dot_id(e.u)} -- {_dot_id(e.v)} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "FORMAT_VERSION",
    "RESULT_FORMAT",
    "parse_graft",
    "serialize_graft",
    "parse_join",
    "dump_result",
    "emit_drawing",
]
