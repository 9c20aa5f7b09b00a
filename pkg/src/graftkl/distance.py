"""Join-induced ±1 weights and the join-independent distance of a graft."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, InputError
from .graph import Graft, Graph, symmetric_difference
from .joins import nu, nu_of, solver_for


@dataclass(frozen=True)
class JoinWeighting:
    """-1 on the edges of ``join``, +1 on every other edge of ``graph``."""

    graph: Graph
    join: frozenset

    def __post_init__(self):
        object.__setattr__(self, "join", self.graph.check_edges(self.join))

    def __call__(self, eid) -> int:
        self.graph.edge(eid)
        return -1 if eid in self.join else 1

    def as_list(self) -> list[int]:
        """Weights in edge order, the layout the kernels expect."""
        return [-1 if e.id in self.join else 1 for e in self.graph.edges]


class Path(NamedTuple):
    vertices: tuple
    edges: tuple

    @classmethod
    def from_vertices(cls, graph: Graph, seq) -> Path:
        seq = tuple(seq)
        return cls(seq, tuple(graph.eid(a, b) for a, b in zip(seq, seq[1:])))

    @property
    def ends(self):
        return self.vertices[0], self.vertices[-1]


def check_path(graph: Graph, path: Path) -> None:
    vs, es = path
    if not vs:
        raise InputError("a path has at least one vertex")
    if len(es) != len(vs) - 1:
        raise InputError("edge count must be one less than vertex count")
    if len(set(vs)) != len(vs):
        raise InputError("path repeats a vertex")
    graph.check_vertices(vs)
    for a, b, eid in zip(vs, vs[1:], es):
        e = graph.edge(eid)
        if {e.u, e.v} != {a, b}:
            raise InputError(f"edge {eid} does not join {a!r} and {b!r}")


def path_weight(weighting: JoinWeighting, path: Path) -> int:
    check_path(weighting.graph, path)
    return sum(weighting(eid) for eid in path.edges)


def same_component(graft: Graft, x, y) -> bool:
    s = solver_for(graft.graph)
    return s.comp_of[graft.graph.index(x)] == s.comp_of[graft.graph.index(y)]


def dist(graft: Graft, x, y) -> int:
    """ν(G, T △ {x, y}) - ν(G, T); zero when ``x == y``."""
    if not same_component(graft, x, y):
        raise DomainError(f"{x!r} and {y!r} lie in different components")
    if x == y:
        return 0
    return nu_of(graft.graph, symmetric_difference(graft.terminals, (x, y))) - nu(graft)


@dataclass(frozen=True)
class DistanceTable:
    """Distances between every pair of vertices sharing a component.

    ``entries`` is keyed by ``(x, y)`` with ``x`` not after ``y`` in vertex
    order; the diagonal is included.
    """

    graft: Graft
    entries: dict

    def _key(self, x, y):
        g = self.graft.graph
        return (x, y) if g.index(x) <= g.index(y) else (y, x)

    def __getitem__(self, pair):
        key = self._key(*pair)
        try:
            return self.entries[key]
        except KeyError:
            raise DomainError(f"no distance between {pair[0]!r} and {pair[1]!r}") from None

    def __len__(self):
        return len(self.entries)


def distance_table(graft: Graft) -> DistanceTable:
    s = solver_for(graft.graph)
    base = nu(graft)
    vs = graft.vertices
    entries = {}
    for comp in s.components:
        for pos, i in enumerate(comp):
            entries[(vs[i], vs[i])] = 0
            for j in comp[pos + 1:]:
                x, y = vs[i], vs[j]
                entries[(x, y)] = (
                    nu_of(graft.graph, symmetric_difference(graft.terminals, (x, y))) - base
                )
    return DistanceTable(graft, entries)
