"""Exhaustive reference implementations and small-instance generators.

Nothing here uses the matching reduction of :mod:`graftkl.joins`: ν comes
from scanning every edge subset, distances from enumerating simple paths,
and the partition from the raw definition of the relation.  The fast modules
are checked against these.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import networkx as nx

from . import kernels
from .distance import JoinWeighting, Path
from .errors import EnumerationLimitError, InputError
from .graph import Graft, Graph, connected_components, is_graft, symmetric_difference

DEFAULT_MAX_EDGES = 16


def _check_bound(graph: Graph, max_edges):
    if len(graph.edges) > max_edges:
        raise EnumerationLimitError(
            f"{len(graph.edges)} edges exceeds the enumeration bound {max_edges}"
        )
    if len(graph.vertices) > kernels.MAX_TABLE_VERTICES:
        raise EnumerationLimitError(f"{len(graph.vertices)} vertices is too many to enumerate")


def _mask_of(graph: Graph, vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << graph.index(v)
    return out


def _edge_set(graph: Graph, mask: int) -> frozenset:
    return frozenset(e.id for k, e in enumerate(graph.edges) if mask >> k & 1)


def enumerate_joins(graft: Graft, max_edges: int = DEFAULT_MAX_EDGES) -> list[frozenset]:
    """Every edge subset with odd degree exactly on T."""
    g = graft.graph
    _check_bound(g, max_edges)
    n, tails, heads = g.arrays()
    masks = kernels.scan_joins(n, tails, heads, _mask_of(g, graft.terminals))
    return [_edge_set(g, m) for m in masks]


def minimum_joins(graft: Graft, max_edges: int = DEFAULT_MAX_EDGES) -> list[frozenset]:
    joins = enumerate_joins(graft, max_edges)
    if not joins:
        return []
    low = min(len(j) for j in joins)
    return sorted((j for j in joins if len(j) == low), key=sorted)


@lru_cache(maxsize=2048)
def _size_table(graph: Graph):
    n, tails, heads = graph.arrays()
    return kernels.join_size_table(n, tails, heads)


def brute_nu_of(graph: Graph, terminals, max_edges: int = DEFAULT_MAX_EDGES):
    """Fewest edges with odd degree exactly on ``terminals``; ``math.inf`` if none."""
    _check_bound(graph, max_edges)
    value = _size_table(graph)[_mask_of(graph, terminals)]
    return math.inf if value < 0 else value


def brute_nu(graft: Graft, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    return brute_nu_of(graft.graph, graft.terminals, max_edges)


def brute_allowed(graft: Graft, max_edges: int = DEFAULT_MAX_EDGES) -> frozenset:
    return frozenset().union(*minimum_joins(graft, max_edges))


def simple_paths(graph: Graph, s, t):
    """Yield every simple s-t path (a single vertex when s == t)."""
    graph.index(s)
    graph.index(t)
    if s == t:
        yield Path((s,), ())
        return
    vs, es = [s], []
    on_path = {s}

    def walk(x):
        for eid in graph.incident(x):
            y = graph.edge(eid).other(x)
            if y in on_path:
                continue
            vs.append(y)
            es.append(eid)
            if y == t:
                yield Path(tuple(vs), tuple(es))
            else:
                on_path.add(y)
                yield from walk(y)
                on_path.discard(y)
            vs.pop()
            es.pop()

    yield from walk(s)


def min_weight_path(graph: Graph, weighting: JoinWeighting, s, t) -> Path:
    """A minimum-weight simple s-t path; the lexicographically smallest edge list wins ties."""
    best = None
    for p in simple_paths(graph, s, t):
        key = (sum(weighting(eid) for eid in p.edges), p.edges)
        if best is None or key < best[0]:
            best = (key, p)
    if best is None:
        raise InputError(f"no path between {s!r} and {t!r}")
    return best[1]


def path_distances(graph: Graph, join) -> dict:
    """Minimum w_F weight over simple paths, for every connected ordered pair."""
    n, tails, heads = graph.arrays()
    weights = JoinWeighting(graph, join).as_list()
    out = {}
    for i, x in enumerate(graph.vertices):
        for j, value in enumerate(kernels.path_minima(n, tails, heads, weights, i)):
            if value is not None:
                out[x, graph.vertices[j]] = value
    return out


def brute_dist(graft: Graft, x, y, join=None, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """Minimum w_F weight of an x-y path, F the given (or first) minimum join."""
    if join is None:
        joins = minimum_joins(graft, max_edges)
        join = joins[0]
    best = None
    weighting = JoinWeighting(graft.graph, join)
    for p in simple_paths(graft.graph, x, y):
        w = sum(weighting(eid) for eid in p.edges)
        best = w if best is None or w < best else best
    if best is None:
        raise InputError(f"no path between {x!r} and {y!r}")
    return best


def _factor_connectivity(graph: Graph, allowed) -> dict:
    skeleton = graph.delete_edges(graph.edge_ids - frozenset(allowed))
    label = {}
    for k, comp in enumerate(connected_components(skeleton)):
        for v in comp:
            label[v] = k
    return label


def _blocks(vertices, related) -> list[frozenset]:
    blocks = []
    for v in vertices:
        block = frozenset(u for u in vertices if related(u, v))
        if block not in blocks:
            blocks.append(block)
    seen = set()
    for b in blocks:
        if seen & b:
            raise InputError("relation is not an equivalence")
        seen |= b
    return blocks


def brute_related(graft: Graft, max_edges: int = DEFAULT_MAX_EDGES):
    """The relation straight from its definition, as a predicate."""
    label = _factor_connectivity(graft.graph, brute_allowed(graft, max_edges))
    base = brute_nu(graft, max_edges)

    def related(u, v):
        if u == v:
            return True
        if label[u] != label[v]:
            return False
        t = symmetric_difference(graft.terminals, (u, v))
        return brute_nu_of(graft.graph, t, max_edges) == base

    return related


def brute_kl(graft: Graft, max_edges: int = DEFAULT_MAX_EDGES) -> list[frozenset]:
    return _blocks(list(graft.vertices), brute_related(graft, max_edges))


def perfect_matchings(graph: Graph) -> list[frozenset]:
    """All perfect matchings, by branching on the smallest uncovered vertex."""
    out = []

    def extend(free, chosen):
        if not free:
            out.append(frozenset(chosen))
            return
        x = min(free, key=graph.index)
        for eid in graph.incident(x):
            y = graph.edge(eid).other(x)
            if y in free:
                chosen.append(eid)
                extend(free - {x, y}, chosen)
                chosen.pop()

    extend(frozenset(graph.vertices), [])
    return out


def is_factorizable(graph: Graph) -> bool:
    return bool(perfect_matchings(graph))


def matching_kl(graph: Graph) -> list[frozenset]:
    """Kotzig-Lovász classes of a factorizable graph via its 1-factors.

    u ~ v iff u, v are joined by a path of edges lying in perfect matchings
    and G - u - v has no perfect matching.
    """
    factors = perfect_matchings(graph)
    if not factors:
        raise InputError("graph has no perfect matching")
    label = _factor_connectivity(graph, frozenset().union(*factors))

    def related(u, v):
        if label[u] != label[v]:
            return False
        return u == v or not is_factorizable(graph.delete_vertices((u, v)))

    return _blocks(list(graph.vertices), related)


def min_circuit_weight(graph: Graph, join):
    """Smallest w_F weight of a circuit, or None if the graph is a forest."""
    n, tails, heads = graph.arrays()
    return kernels.min_circuit(n, tails, heads, JoinWeighting(graph, join).as_list())


def circuits(graph: Graph):
    """Yield each circuit once as a frozenset of edge ids."""
    seen = set()
    for s in graph.vertices:
        for eid in graph.incident(s):
            y = graph.edge(eid).other(s)
            if graph.index(y) < graph.index(s):
                continue
            for p in simple_paths(graph.delete_edges([eid]), y, s):
                if len(p.edges) < 1 or any(graph.index(v) < graph.index(s) for v in p.vertices):
                    continue
                c = frozenset(p.edges) | {eid}
                if c not in seen:
                    seen.add(c)
                    yield c


@dataclass(frozen=True)
class InstanceStream:
    """Reproducible stream of small grafts.

    The exhaustive part walks every connected graph on 1..``max_n`` vertices
    (one per isomorphism class, from the networkx graph atlas) with every
    terminal set allowed by ``terminal_policy``: ``"all"`` (each even subset),
    ``"full"`` (T = V when |V| is even) or ``"empty"``.  The random part adds
    ``random_count`` seeded grafts on up to ``random_max_n`` vertices, which
    need not be connected.
    """

    max_n: int = 6
    terminal_policy: str = "all"
    random_count: int = 0
    random_max_n: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.max_n > 7:
            raise EnumerationLimitError("the graph atlas stops at 7 vertices")
        if self.terminal_policy not in ("all", "full", "empty"):
            raise InputError(f"unknown terminal policy {self.terminal_policy!r}")

    def graphs(self):
        for atlas_graph in nx.graph_atlas_g():
            n = atlas_graph.number_of_nodes()
            if n < 1 or n > self.max_n or not nx.is_connected(atlas_graph):
                continue
            yield Graph(range(n), [(u, v, k) for k, (u, v) in enumerate(sorted(atlas_graph.edges()))])

    def _terminal_sets(self, n):
        if self.terminal_policy == "empty":
            yield frozenset()
        elif self.terminal_policy == "full":
            if n % 2 == 0:
                yield frozenset(range(n))
        else:
            for size in range(0, n + 1, 2):
                for ts in combinations(range(n), size):
                    yield frozenset(ts)

    def _random(self):
        rng = random.Random(self.seed)
        seen = set()
        emitted = 0
        attempts = 0
        while emitted < self.random_count and attempts < 50 * self.random_count + 100:
            attempts += 1
            n = rng.randint(1, self.random_max_n)
            p = rng.uniform(0.15, 0.7)
            pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
            g = Graph(range(n), [(u, v, k) for k, (u, v) in enumerate(pairs)])
            terms = {v for v in range(n) if rng.random() < 0.5}
            for comp in connected_components(g):
                if len(comp & terms) % 2:
                    terms ^= {rng.choice(sorted(comp))}
            key = (n, tuple(pairs), frozenset(terms))
            if key in seen:
                continue
            seen.add(key)
            emitted += 1
            yield Graft(g, frozenset(terms))

    def __iter__(self):
        for g in self.graphs():
            for ts in self._terminal_sets(len(g.vertices)):
                if is_graft(g, ts):
                    yield Graft(g, ts)
        if self.random_count:
            yield from self._random()


def instance_stream(max_n=6, terminal_policy="all", random_count=0, random_max_n=10, seed=0):
    return InstanceStream(max_n, terminal_policy, random_count, random_max_n, seed)


def find_proper_refinement_witness(stream):
    """First graft whose partition strictly refines that of one of its factor-components."""
    from .structure import refinement_report

    for graft in stream:
        if any(entry.proper for entry in refinement_report(graft)):
            return graft
    return None
