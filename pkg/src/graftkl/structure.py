"""Factor-components, comb-bipartite grafts and the Kotzig-Lovász partition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .distance import distance_table
from .errors import GraftError, InputError
from .graph import Graft, Graph, connected_components, induced_edges, sort_vertices
from .joins import allowed_edges, min_join


@dataclass(frozen=True)
class FactorComponent:
    """A maximal factor-connected piece of a graft.

    ``edges`` is every edge of G with both ends inside, allowed or not;
    ``allowed`` is the subset of them that lies in some minimum join.
    """

    graft: Graft
    vertices: frozenset
    edges: frozenset
    allowed: frozenset

    def subgraft(self) -> Graft:
        """``(H, T ∩ V(H))`` as a graft of its own."""
        return self.graft.restrict(self.vertices)

    def __repr__(self):
        return f"FactorComponent({sort_vertices(self.vertices)})"


@lru_cache(maxsize=4096)
def _factor_components(graft: Graft) -> tuple[FactorComponent, ...]:
    allowed = allowed_edges(graft)
    g = graft.graph
    skeleton = g.delete_edges(g.edge_ids - allowed)
    out = []
    for comp in connected_components(skeleton):
        inner = induced_edges(g, comp)
        out.append(FactorComponent(graft, comp, inner, inner & allowed))
    return tuple(out)


def factor_components(graft: Graft) -> list[FactorComponent]:
    return list(_factor_components(graft))


def factor_component_of(graft: Graft, v) -> FactorComponent:
    graft.graph.index(v)
    for h in _factor_components(graft):
        if v in h.vertices:
            return h
    raise AssertionError("factor-components must cover V(G)")


def factor_connected(graft: Graft, u, v) -> bool:
    return v in factor_component_of(graft, u).vertices


def same_class(graft: Graft, u, v) -> bool:
    """``u ~ v``: equal, or factor-connected at distance zero."""
    if u == v:
        graft.graph.index(u)
        return True
    if not factor_connected(graft, u, v):
        return False
    return distance_table(graft)[u, v] == 0


@dataclass(frozen=True)
class KLPartition:
    graft: Graft
    classes: tuple
    components: tuple
    component_index: dict

    def class_of(self, v) -> frozenset:
        for c in self.classes:
            if v in c:
                return c
        raise InputError(f"unknown vertex {v!r}")

    def as_lists(self) -> list[list]:
        return [sort_vertices(c) for c in self.classes]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)


class NotAnEquivalence(GraftError):
    """The relation handed to the class builder was not transitive."""


def _classes(vertices, related):
    """Equivalence classes of ``related`` over ``vertices`` in order."""
    assigned = {}
    classes = []
    for v in vertices:
        if v in assigned:
            continue
        cls = frozenset(u for u in vertices if u == v or related(u, v))
        clash = [u for u in cls if u in assigned]
        if clash:
            raise NotAnEquivalence(f"{v!r} and {clash[0]!r} break transitivity")
        for u in cls:
            assigned[u] = cls
        classes.append(cls)
    return classes


@lru_cache(maxsize=4096)
def kl_partition(graft: Graft) -> KLPartition:
    table = distance_table(graft)
    comps = _factor_components(graft)
    classes = []
    index = {}
    for k, h in enumerate(comps):
        members = [v for v in graft.vertices if v in h.vertices]
        for cls in _classes(members, lambda a, b: table[a, b] == 0):
            classes.append(cls)
            index[cls] = k
    order = {v: i for i, v in enumerate(graft.vertices)}
    classes.sort(key=lambda c: min(order[v] for v in c))
    return KLPartition(graft, tuple(classes), comps, index)


def kl_classes_of_component(partition: KLPartition, component: FactorComponent) -> list[frozenset]:
    """The classes of ``partition`` lying inside ``component``."""
    if component not in partition.components:
        raise InputError("factor-component of a different graft")
    return [c for c in partition.classes if c <= component.vertices]


def transitivity_violations(graft: Graft) -> list[tuple]:
    """Triples (u, v, w) with u ~ v, v ~ w but not u ~ w.  Empty in practice."""
    vs = graft.vertices
    rel = {(u, v): same_class(graft, u, v) for u in vs for v in vs}
    return [
        (u, v, w)
        for u in vs for v in vs for w in vs
        if rel[u, v] and rel[v, w] and not rel[u, w]
    ]


def partition_refines(fine, coarse) -> bool:
    """Every block of ``fine`` lies inside some block of ``coarse``."""
    coarse = [frozenset(c) for c in coarse]
    return all(any(frozenset(f) <= c for c in coarse) for f in fine)


@dataclass(frozen=True)
class RefinementEntry:
    component: FactorComponent
    in_graft: tuple
    standalone: tuple
    refines: bool

    @property
    def proper(self) -> bool:
        return self.refines and len(self.in_graft) > len(self.standalone)


def refinement_report(graft: Graft) -> list[RefinementEntry]:
    """Compare each component's classes in (G, T) with those of (H, T ∩ V(H))."""
    part = kl_partition(graft)
    out = []
    for h in part.components:
        inside = tuple(kl_classes_of_component(part, h))
        alone = kl_partition(h.subgraft()).classes
        out.append(RefinementEntry(h, inside, alone, partition_refines(inside, alone)))
    return out


def two_coloring(graph: Graph):
    """Per component ``(X, Y)`` with the smallest vertex in X; None if not bipartite."""
    out = []
    for comp in connected_components(graph):
        start = sort_vertices(comp)[0]
        color = {start: 0}
        stack = [start]
        while stack:
            x = stack.pop()
            for eid in graph.incident(x):
                y = graph.edge(eid).other(x)
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
        out.append((frozenset(v for v in comp if color[v] == 0),
                    frozenset(v for v in comp if color[v] == 1)))
    return out


@dataclass(frozen=True)
class CombBipartiteView:
    graft: Graft
    spine: frozenset
    tooth: frozenset


def is_comb_bipartite(graft: Graft) -> tuple[CombBipartiteView, ...]:
    """Every spine/tooth orientation under which the graft is comb-bipartite.

    Empty when there is none.  A connected graft yields at most two views.
    One minimum join suffices: with B ⊆ T, ν = |B| iff that join meets each
    tooth exactly once.
    """
    sides = two_coloring(graft.graph)
    if sides is None:
        return ()
    g = graft.graph
    join = min_join(graft).edges

    def single(v):
        return sum(1 for eid in g.incident(v) if eid in join) == 1

    choices = []
    for x, y in sides:
        opts = [(a, b) for a, b in ((y, x), (x, y))
                if b <= graft.terminals and all(single(v) for v in b)]
        if not opts:
            return ()
        choices.append(opts)
    views = []
    for combo in product(*choices):
        spine = frozenset().union(*(a for a, _ in combo))
        tooth = frozenset().union(*(b for _, b in combo))
        views.append(CombBipartiteView(graft, spine, tooth))
    return tuple(views)
