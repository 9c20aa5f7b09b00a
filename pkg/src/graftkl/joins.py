"""Minimum joins, ν(G, T), join tests and allowed edges.

A minimum join of a connected graft is found by pairing up the terminals
with minimum total shortest-path length and taking the symmetric difference
of the chosen shortest paths.  Pairings with at most
``kernels.MAX_DP_TERMINALS`` terminals per component are solved exactly by a
subset DP with a lexicographic tie-break; larger ones go to networkx's blossom
matching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from . import kernels
from .errors import InputError
from .graph import Graft, Graph, connected_components, symmetric_difference


class JoinSolver:
    """Join computations on one fixed graph, for any terminal set.

    ν values are memoized per terminal bitmask, which makes the O(n²) ν
    calls behind a distance table cheap once the first one has been made.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n, self.tails, self.heads = graph.arrays()
        self.eids = [e.id for e in graph.edges]
        self.components = [
            sorted(graph.index(v) for v in comp) for comp in connected_components(graph)
        ]
        self.comp_of = [0] * self.n
        for c, comp in enumerate(self.components):
            for i in comp:
                self.comp_of[i] = c
        self._dist = None
        self._nu = {}

    @property
    def dist(self):
        if self._dist is None:
            self._dist = kernels.all_pairs_bfs(self.n, self.tails, self.heads)
        return self._dist

    def mask(self, vertices) -> int:
        out = 0
        for v in vertices:
            out |= 1 << self.graph.index(v)
        return out

    def _split(self, mask):
        """Terminal indices per component, or None if some count is odd."""
        groups = [[] for _ in self.components]
        i = 0
        while mask:
            if mask & 1:
                groups[self.comp_of[i]].append(i)
            mask >>= 1
            i += 1
        if any(len(g) % 2 for g in groups):
            return None
        return groups

    def _pairing(self, terms):
        if len(terms) <= kernels.MAX_DP_TERMINALS:
            cost, pairs = kernels.pair_matching(self.dist, terms)
            return cost, pairs
        aux = nx.Graph()
        for a_pos, a in enumerate(terms):
            for b in terms[a_pos + 1:]:
                aux.add_edge(a, b, weight=self.dist[a][b])
        matching = nx.min_weight_matching(aux)
        pairs = sorted(tuple(sorted(p)) for p in matching)
        return sum(self.dist[a][b] for a, b in pairs), pairs

    def nu_mask(self, mask: int):
        """ν for the terminal bitmask, or None when it is not a graft."""
        hit = self._nu.get(mask, False)
        if hit is not False:
            return hit
        groups = self._split(mask)
        if groups is None:
            value = None
        else:
            value = sum(self._pairing(g)[0] for g in groups if g)
        self._nu[mask] = value
        return value

    def _shortest_path(self, a, b):
        """Lexicographically smallest edge-position sequence among shortest a-b paths."""
        d = self.dist
        path = []
        x = a
        while x != b:
            best = None
            for k, (p, q) in enumerate(zip(self.tails, self.heads)):
                y = q if p == x else p if q == x else None
                if y is not None and d[y][b] == d[x][b] - 1:
                    best = k if best is None or self.eids[k] < self.eids[best] else best
            path.append(best)
            x = self.heads[best] if self.tails[best] == x else self.tails[best]
        return path

    def min_join_mask(self, mask: int) -> frozenset:
        groups = self._split(mask)
        if groups is None:
            raise InputError("terminal set has odd parity on some component")
        chosen = set()
        for g in groups:
            if not g:
                continue
            _, pairs = self._pairing(g)
            for a, b in pairs:
                chosen ^= {self.eids[k] for k in self._shortest_path(a, b)}
        return frozenset(chosen)


@lru_cache(maxsize=8192)
def solver_for(graph: Graph) -> JoinSolver:
    return JoinSolver(graph)


@dataclass(frozen=True)
class JoinCertificate:
    graft: Graft
    edges: frozenset
    size: int
    minimum: bool


def odd_vertices(graph: Graph, edges) -> frozenset:
    """Vertices of odd degree in the spanning subgraph with edge set ``edges``."""
    odd = set()
    for eid in graph.check_edges(edges):
        e = graph.edge(eid)
        odd ^= {e.u, e.v}
    return frozenset(odd)


def is_join(graft: Graft, edges) -> bool:
    return odd_vertices(graft.graph, edges) == graft.terminals


def nu_of(graph: Graph, terminals):
    """ν(G, T), or ``math.inf`` when (G, T) is not a graft."""
    s = solver_for(graph)
    value = s.nu_mask(s.mask(terminals))
    return math.inf if value is None else value


def nu(graft: Graft) -> int:
    return nu_of(graft.graph, graft.terminals)


def min_join(graft: Graft) -> JoinCertificate:
    s = solver_for(graft.graph)
    edges = s.min_join_mask(s.mask(graft.terminals))
    return JoinCertificate(graft, edges, len(edges), True)


def is_minimum_join(graft: Graft, edges) -> bool:
    edges = graft.graph.check_edges(edges)
    return is_join(graft, edges) and len(edges) == nu(graft)


@lru_cache(maxsize=4096)
def allowed_edges(graft: Graft) -> frozenset:
    """Edges lying in at least one minimum join.

    ``uv`` qualifies iff ν(G - uv, T △ {u, v}) = ν(G, T) - 1.
    """
    graph = graft.graph
    base = nu(graft)
    out = set()
    for e in graph.edges:
        rest = graph.delete_edges([e.id])
        if nu_of(rest, symmetric_difference(graft.terminals, (e.u, e.v))) == base - 1:
            out.add(e.id)
    return frozenset(out)
