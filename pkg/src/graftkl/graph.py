"""Graphs with persistent edge ids, grafts, and the cut/contraction primitives.

Every operation in the package works on :class:`Graph` and :class:`Graft`
values.  Both are immutable after construction and hashable, so they can be
used as cache keys.  Edge ids survive subgraph, deletion and contraction, which
is how an edge of a contracted graph is identified with the edge of the
original graph it came from.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InputError, NotAGraftError

Vertex = Hashable


def vertex_key(v):
    """Sort key placing integers (numerically) before everything else (as text)."""
    if isinstance(v, int) and not isinstance(v, bool):
        return (0, v, "")
    return (1, 0, str(v))


def sort_vertices(vs: Iterable) -> list:
    return sorted(vs, key=vertex_key)


class Edge(NamedTuple):
    u: Vertex
    v: Vertex
    id: int

    def other(self, x):
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise InputError(f"{x!r} is not an endpoint of edge {self.id}")


class Graph:
    """Undirected graph without self-loops.

    Input graphs must be simple.  Graphs produced by :func:`contract` carry
    ``contracted=True`` and may contain parallel edges, because distinct edges
    of the original graph can end up joining the same pair of blocks.
    """

    __slots__ = ("_vertices", "_edges", "_index", "_by_id", "_incident", "_hash", "contracted")

    def __init__(self, vertices: Iterable = (), edges: Iterable = (), *, contracted: bool = False):
        raw_edges = list(edges)
        vset = set(vertices)
        for rec in raw_edges:
            vset.update(rec[:2])
        self._vertices = tuple(sort_vertices(vset))
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self.contracted = contracted

        built = []
        seen_ids = set()
        seen_pairs = set()
        for pos, rec in enumerate(raw_edges):
            if len(rec) == 2:
                u, v = rec
                eid = pos
            else:
                u, v, eid = rec
            if u == v:
                raise InputError(f"self-loop at {u!r}")
            if eid in seen_ids:
                raise InputError(f"duplicate edge id {eid!r}")
            pair = frozenset((u, v))
            if pair in seen_pairs and not contracted:
                raise InputError(f"parallel edge {u!r}-{v!r} in a simple graph")
            seen_ids.add(eid)
            seen_pairs.add(pair)
            built.append(Edge(u, v, eid))
        self._edges = tuple(built)
        self._by_id = {e.id: e for e in built}
        incident = {v: [] for v in self._vertices}
        for e in built:
            incident[e.u].append(e.id)
            incident[e.v].append(e.id)
        self._incident = {v: tuple(ids) for v, ids in incident.items()}
        self._hash = None

    @classmethod
    def from_edges(cls, pairs: Iterable, vertices: Iterable = ()) -> Graph:
        """Build a simple graph; edge ids are positions in ``pairs``."""
        return cls(vertices, [(u, v, i) for i, (u, v) in enumerate(pairs)])

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_ids(self) -> frozenset:
        return frozenset(self._by_id)

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def edge(self, eid) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid!r}") from None

    def has_edge_id(self, eid) -> bool:
        return eid in self._by_id

    def eid(self, u, v):
        """Id of the edge joining ``u`` and ``v`` (smallest id if parallel)."""
        self.index(u)
        self.index(v)
        found = [eid for eid in self._incident[u] if self._by_id[eid].other(u) == v]
        if not found:
            raise InputError(f"no edge between {u!r} and {v!r}")
        return min(found)

    def incident(self, v) -> tuple:
        self.index(v)
        return self._incident[v]

    def neighbors(self, v) -> list:
        return sort_vertices({self._by_id[eid].other(v) for eid in self.incident(v)})

    def check_vertices(self, xs: Iterable) -> frozenset:
        xs = frozenset(xs)
        for x in xs:
            self.index(x)
        return xs

    def check_edges(self, eids: Iterable) -> frozenset:
        eids = frozenset(eids)
        for eid in eids:
            self.edge(eid)
        return eids

    def subgraph(self, xs: Iterable) -> Graph:
        """Induced subgraph ``G[X]``; edge ids are kept."""
        xs = self.check_vertices(xs)
        return Graph(xs, [e for e in self._edges if e.u in xs and e.v in xs],
                     contracted=self.contracted)

    def delete_edges(self, eids: Iterable) -> Graph:
        """``G - F``: remove edges, keep every vertex."""
        eids = self.check_edges(eids)
        return Graph(self._vertices, [e for e in self._edges if e.id not in eids],
                     contracted=self.contracted)

    def delete_vertices(self, xs: Iterable) -> Graph:
        xs = self.check_vertices(xs)
        return self.subgraph(v for v in self._vertices if v not in xs)

    def arrays(self):
        """(n, tails, heads) with endpoints as vertex indices, in edge order."""
        return (len(self._vertices),
                [self._index[e.u] for e in self._edges],
                [self._index[e.v] for e in self._edges])

    def _key(self):
        return (self._vertices, frozenset(self._edges), self.contracted)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        es = ", ".join(f"{e.u}-{e.v}" for e in self._edges)
        return f"Graph(V={list(self._vertices)}, E=[{es}])"


def connected_components(graph: Graph) -> list[frozenset]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = set()
    comps = []
    for s in graph.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for eid in graph.incident(x):
                y = graph.edge(eid).other(x)
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def cut(graph: Graph, xs: Iterable) -> frozenset:
    """Edges with exactly one endpoint in ``xs``."""
    xs = graph.check_vertices(xs)
    return frozenset(e.id for e in graph.edges if (e.u in xs) != (e.v in xs))


def induced_edges(graph: Graph, xs: Iterable) -> frozenset:
    """Edges with both endpoints in ``xs``."""
    xs = graph.check_vertices(xs)
    return frozenset(e.id for e in graph.edges if e.u in xs and e.v in xs)


def symmetric_difference(a: Iterable, b: Iterable) -> frozenset:
    a, b = frozenset(a), frozenset(b)
    return (a - b) | (b - a)


def parity_violation(graph: Graph, terminals: Iterable):
    """First component with an odd number of terminals, or None."""
    terminals = graph.check_vertices(terminals)
    for comp in connected_components(graph):
        k = len(comp & terminals)
        if k % 2:
            return comp, k
    return None


def is_graft(graph: Graph, terminals: Iterable) -> bool:
    return parity_violation(graph, terminals) is None


@dataclass(frozen=True)
class Graft:
    """A graph with a terminal set of even size on every component."""

    graph: Graph
    terminals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        terminals = self.graph.check_vertices(self.terminals)
        object.__setattr__(self, "terminals", terminals)
        bad = parity_violation(self.graph, terminals)
        if bad is not None:
            comp, k = bad
            raise NotAGraftError(sort_vertices(comp), k)

    @classmethod
    def from_edges(cls, pairs, terminals=(), vertices=()) -> Graft:
        return cls(Graph.from_edges(pairs, vertices), frozenset(terminals))

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def edges(self):
        return self.graph.edges

    def restrict(self, xs: Iterable) -> Graft:
        """``(G[X], T ∩ X)``."""
        xs = frozenset(xs)
        return Graft(self.graph.subgraph(xs), self.terminals & xs)

    def __repr__(self):
        return f"Graft({self.graph!r}, T={sort_vertices(self.terminals)})"


@dataclass(frozen=True)
class Contraction:
    """Bookkeeping for :func:`contract`.

    ``vertex_map`` sends every original vertex to its image, ``blocks`` sends
    each new vertex back to the part it replaced, and ``dropped`` holds the ids
    of edges that became self-loops.
    """

    original: Graph
    vertex_map: dict
    blocks: dict
    dropped: frozenset

    def expand(self, v) -> frozenset:
        return self.blocks.get(v, frozenset((v,)))


def _block_name(part, taken):
    name = f"[{sort_vertices(part)[0]}]"
    while name in taken:
        name += "'"
    return name


def contract(graph: Graph, parts: Iterable[Iterable]) -> tuple[Graph, Contraction]:
    """Contract each part into one vertex named ``[min(part)]``.

    Edges inside a part are dropped; all other edges keep their ids, so the
    result may have parallel edges and is flagged ``contracted``.
    """
    parts = [graph.check_vertices(p) for p in parts]
    used = set()
    for p in parts:
        if not p:
            raise InputError("empty part")
        if used & p:
            raise InputError(f"parts overlap on {sort_vertices(used & p)}")
        used |= p
        if len(connected_components(graph.subgraph(p))) != 1:
            raise InputError(f"part {sort_vertices(p)} does not induce a connected subgraph")

    vertex_map = {v: v for v in graph.vertices}
    blocks = {}
    taken = {str(v) for v in graph.vertices if v not in used}
    for p in sorted(parts, key=lambda p: vertex_key(sort_vertices(p)[0])):
        name = _block_name(p, taken)
        taken.add(name)
        blocks[name] = p
        for v in p:
            vertex_map[v] = name

    kept, dropped = [], []
    for e in graph.edges:
        a, b = vertex_map[e.u], vertex_map[e.v]
        if a == b:
            dropped.append(e.id)
        else:
            kept.append((a, b, e.id))
    result = Graph(set(vertex_map.values()), kept, contracted=True)
    return result, Contraction(graph, vertex_map, blocks, frozenset(dropped))
