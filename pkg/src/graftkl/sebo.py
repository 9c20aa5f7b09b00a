"""Distance decomposition of a graft around a root vertex.

Given a minimum join F and a root r, vertices at distance 0 from r form the
level set, vertices at negative distance the negative layer.  The core is
the component of r once edges inside the level set are removed; contracting
each negative component of the core yields a bipartite graft whose teeth are
the contracted blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .distance import JoinWeighting, Path, distance_table
from .errors import GraftError, InputError, NotAGraftError
from .graph import (
    Contraction,
    Graft,
    Graph,
    connected_components,
    contract,
    cut,
    induced_edges,
    sort_vertices,
    symmetric_difference,
)
from .joins import allowed_edges, is_minimum_join
from .oracle import min_weight_path
from .structure import FactorComponent, is_comb_bipartite


@dataclass(frozen=True)
class NegativeComponent:
    """One component K of the core minus the level set.

    ``cut_join`` is δ_G(K) ∩ F.  When it is a single edge, ``edge`` is that
    edge, ``anchor`` its end inside K and ``partner`` its end outside.
    """

    vertices: frozenset
    block: str
    cut_join: frozenset
    edge: object = None
    anchor: object = None
    partner: object = None


@dataclass(frozen=True)
class SeboDecomposition:
    graft: Graft
    root: object
    join: frozenset
    level0: frozenset
    negative: frozenset
    core: frozenset
    core_graph: Graph
    components: tuple
    contracted: Graph
    contraction: Contraction
    contracted_terminals: frozenset

    @property
    def spine(self) -> frozenset:
        return self.level0 & self.core

    @property
    def teeth(self) -> frozenset:
        return frozenset(k.block for k in self.components)

    def contracted_graft(self) -> Graft:
        return Graft(self.contracted, self.contracted_terminals)

    def component_of(self, v) -> NegativeComponent:
        for k in self.components:
            if v in k.vertices or v == k.block:
                return k
        raise InputError(f"{v!r} is in no negative component")

    def image(self, vertices) -> frozenset:
        """Vertices of the contracted graph that stand for ``vertices``."""
        return frozenset(self.contraction.vertex_map[v] for v in vertices if v in self.core)


def sebo_decomposition(graft: Graft, join, root) -> SeboDecomposition:
    g = graft.graph
    g.index(root)
    join = g.check_edges(join)
    if not is_minimum_join(graft, join):
        raise InputError("the given edge set is not a minimum join")

    table = distance_table(graft)
    reach = [v for v in g.vertices if (root, v) in table.entries or (v, root) in table.entries]
    level0 = frozenset(v for v in reach if table[root, v] == 0)
    negative = frozenset(v for v in reach if table[root, v] < 0)

    layer = level0 | negative
    trimmed = Graph(
        layer,
        [e for e in g.edges
         if e.u in layer and e.v in layer and not (e.u in level0 and e.v in level0)],
    )
    core = next(c for c in connected_components(trimmed) if root in c)
    core_graph = trimmed.subgraph(core)

    pieces = connected_components(core_graph.delete_vertices(core & level0))
    contracted, mapping = contract(core_graph, pieces)
    components = []
    for piece in pieces:
        crossing = cut(g, piece) & join
        block = mapping.vertex_map[next(iter(piece))]
        if len(crossing) == 1:
            (eid,) = crossing
            e = g.edge(eid)
            inside, outside = (e.u, e.v) if e.u in piece else (e.v, e.u)
            components.append(NegativeComponent(piece, block, crossing, eid, inside, outside))
        else:
            components.append(NegativeComponent(piece, block, crossing))
    components.sort(key=lambda k: g.index(sort_vertices(k.vertices)[0]))
    terminals = (graft.terminals & core & level0) | {k.block for k in components}
    return SeboDecomposition(
        graft, root, join, level0, negative, core, core_graph, tuple(components),
        contracted, mapping, frozenset(terminals),
    )


class SeboCheck(NamedTuple):
    item: str
    name: str
    passed: bool
    detail: str


def _negative_subgraft(d: SeboDecomposition, k: NegativeComponent) -> Graft:
    g = d.graft.graph
    return Graft(g.subgraph(k.vertices),
                 symmetric_difference(d.graft.terminals & k.vertices, (k.anchor,)))


def verify_sebo(d: SeboDecomposition) -> list[SeboCheck]:
    """Evaluate the six structural claims of the decomposition directly."""
    g = d.graft.graph
    allowed = allowed_edges(d.graft)
    checks = []

    bad = sorted(cut(g, d.core) & allowed)
    checks.append(SeboCheck("i", "core cut has no allowed edge", not bad,
                            f"allowed cut edges: {bad}" if bad else "ok"))

    bad = sorted(induced_edges(g, d.spine) & allowed)
    checks.append(SeboCheck("ii", "no allowed edge inside the level set of the core", not bad,
                            f"allowed level edges: {bad}" if bad else "ok"))

    problems = []
    for k in d.components:
        if len(k.cut_join) != 1:
            problems.append(f"{k.block}: |cut ∩ F| = {len(k.cut_join)}")
        elif k.partner not in d.level0:
            problems.append(f"{k.block}: partner {k.partner!r} not at distance 0")
    checks.append(SeboCheck("iii", "each negative component meets F in one cut edge",
                            not problems, "; ".join(problems) or "ok"))

    anchored = all(len(k.cut_join) == 1 for k in d.components)
    try:
        q = d.contracted_graft()
    except NotAGraftError as exc:
        checks.append(SeboCheck("iv", "contracted graft is comb-bipartite", False, str(exc)))
    else:
        teeth = d.teeth
        views = [v for v in is_comb_bipartite(q) if v.tooth == teeth]
        anchors = frozenset(k.edge for k in d.components) if anchored else None
        ok_join = anchors is not None and is_minimum_join(q, anchors)
        detail = []
        if not views:
            detail.append("tooth set is not the set of blocks")
        if not ok_join:
            detail.append("anchor edges are not a minimum join")
        checks.append(SeboCheck("iv", "contracted graft is comb-bipartite", not detail,
                                "; ".join(detail) or "ok"))

    problems_v, problems_vi = [], []
    for k in d.components:
        if k.anchor is None:
            problems_v.append(f"{k.block}: no anchor")
            problems_vi.append(f"{k.block}: no anchor")
            continue
        try:
            sub = _negative_subgraft(d, k)
        except NotAGraftError as exc:
            problems_v.append(f"{k.block}: {exc}")
            problems_vi.append(f"{k.block}: {exc}")
            continue
        inner = d.join & induced_edges(g, k.vertices)
        if not is_minimum_join(sub, inner):
            problems_v.append(f"{k.block}: F ∩ E(K) is not a minimum join")
        table = distance_table(sub)
        for x in sort_vertices(k.vertices):
            if table[x, k.anchor] > 0:
                problems_vi.append(f"{k.block}: dist({x!r}, {k.anchor!r}) > 0")
    checks.append(SeboCheck("v", "F restricted to each negative component is a minimum join",
                            not problems_v, "; ".join(problems_v) or "ok"))
    checks.append(SeboCheck("vi", "every vertex of K is within distance 0 of its anchor",
                            not problems_vi, "; ".join(problems_vi) or "ok"))
    return checks


def lift_negative_path(d: SeboDecomposition, start, edges, v) -> Path:
    """Turn a weight -1 path of the contracted graft into a G-path ending at ``v``.

    ``edges`` lists the edge ids of the contracted path from the level-set
    vertex ``start`` to the block containing ``v``.  Each block the path
    passes is replaced by a path of weight at most 0 between the two points
    where the contracted path enters and leaves it.
    """
    q = d.contracted
    if start not in d.spine:
        raise InputError(f"{start!r} is not a level-0 vertex of the core")
    target = d.component_of(v)
    edges = list(edges)
    if not edges:
        raise InputError("the contracted path must have at least one edge")
    seq = [start]
    for eid in edges:
        seq.append(q.edge(eid).other(seq[-1]))
    if len(set(seq)) != len(seq):
        raise InputError("not a path of the contracted graft")
    if seq[-1] != target.block:
        raise InputError(f"path ends at {seq[-1]!r}, not at {target.block!r}")
    if sum(-1 if eid in d.join else 1 for eid in edges) != -1:
        raise InputError("the contracted path does not have weight -1")

    g = d.graft.graph
    weights = JoinWeighting(g, d.join)
    out_vertices, out_edges = [start], []
    for pos, node in enumerate(seq[1:], start=1):
        into = g.edge(edges[pos - 1])
        out_edges.append(into.id)
        if node not in d.contraction.blocks:
            out_vertices.append(node)
            continue
        block = d.contraction.blocks[node]
        enter = into.u if into.u in block else into.v
        if pos < len(edges):
            leave_edge = g.edge(edges[pos])
            leave = leave_edge.u if leave_edge.u in block else leave_edge.v
        else:
            leave = v
        inner = g.subgraph(block)
        splice = min_weight_path(inner, weights, enter, leave)
        out_vertices.extend(splice.vertices)
        out_edges.extend(splice.edges)
    result = Path(tuple(out_vertices), tuple(out_edges))
    if len(set(result.vertices)) != len(result.vertices):
        raise GraftError("lifted walk is not a path")
    if sum(weights(eid) for eid in result.edges) > -1:
        raise GraftError("lifted path has weight above -1")
    return result


def component_image(d: SeboDecomposition, h: FactorComponent) -> frozenset:
    """Contracted-graft vertices standing for the factor-component ``h``."""
    return d.image(h.vertices)
