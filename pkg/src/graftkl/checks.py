"""Per-instance structural checks against the exhaustive oracle.

Each ``check_*`` function takes one graft and returns a list of failure
messages; an empty list means the property held.  ``run_checks`` drives them
for the CLI ``verify`` command and the acceptance suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import oracle
from .distance import JoinWeighting, dist, distance_table
from .errors import GraftError
from .graph import Graft, symmetric_difference
from .joins import allowed_edges, is_minimum_join, min_join, nu
from .sebo import lift_negative_path, sebo_decomposition, verify_sebo
from .structure import (
    factor_component_of,
    factor_components,
    is_comb_bipartite,
    kl_partition,
    refinement_report,
    same_class,
    transitivity_violations,
    two_coloring,
)

CIRCUIT_MAX_EDGES = 10


@dataclass
class Budget:
    """Caps the (join, root) pairs examined per graft; None means all of them."""

    max_pairs: int | None = None
    seed: int = 0
    rng: random.Random = field(init=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    def pick(self, items):
        items = list(items)
        if self.max_pairs is None or len(items) <= self.max_pairs:
            return items
        return sorted(self.rng.sample(items, self.max_pairs), key=items.index)


def _pairs(graft):
    vs = graft.vertices
    table = distance_table(graft)
    return [(x, y) for x, y in combinations(vs, 2) if (x, y) in table.entries]


def check_oracle_equivalence(graft: Graft) -> list[str]:
    out = []
    if nu(graft) != oracle.brute_nu(graft):
        out.append(f"nu {nu(graft)} != brute {oracle.brute_nu(graft)}")
    if not is_minimum_join(graft, min_join(graft).edges):
        out.append("min_join output is not a minimum join")
    if allowed_edges(graft) != oracle.brute_allowed(graft):
        out.append("allowed edges differ from the union of all minimum joins")
    first = oracle.minimum_joins(graft)[0]
    by_paths = oracle.path_distances(graft.graph, first)
    for x, y in _pairs(graft):
        if dist(graft, x, y) != by_paths[x, y]:
            out.append(f"dist({x},{y}) = {dist(graft, x, y)} but path minimum is {by_paths[x, y]}")
    mine = sorted(sorted(c) for c in kl_partition(graft).classes)
    ref = sorted(sorted(c) for c in oracle.brute_kl(graft))
    if mine != ref:
        out.append(f"partition {mine} != brute {ref}")
    return out


def check_join_independence(graft: Graft) -> list[str]:
    """Path distances under every minimum join equal the ν-difference distance."""
    out = []
    table = distance_table(graft)
    for join in oracle.minimum_joins(graft):
        by_paths = oracle.path_distances(graft.graph, join)
        for (x, y), d in table.entries.items():
            if by_paths[x, y] != d:
                out.append(f"F={sorted(join)}: path minimum {x}-{y} is {by_paths[x, y]}, dist {d}")
    return out


def check_circuit_criterion(graft: Graft, max_edges: int = CIRCUIT_MAX_EDGES) -> list[str]:
    """A join is minimum iff no circuit has negative weight under it."""
    if len(graft.edges) > max_edges:
        return []
    out = []
    low = nu(graft)
    for join in oracle.enumerate_joins(graft):
        worst = oracle.min_circuit_weight(graft.graph, join)
        conservative = worst is None or worst >= 0
        if conservative != (len(join) == low):
            out.append(f"F={sorted(join)}: |F|={len(join)}, nu={low}, min circuit {worst}")
    return out


def check_transitivity(graft: Graft) -> list[str]:
    return [f"{u}~{v}, {v}~{w} but not {u}~{w}" for u, v, w in transitivity_violations(graft)]


def check_relation_dichotomy(graft: Graft) -> list[str]:
    """Factor-connected pairs are at distance 0 (related) or negative (unrelated)."""
    out = []
    for x, y in _pairs(graft):
        if y not in factor_component_of(graft, x).vertices:
            continue
        d = dist(graft, x, y)
        if d > 0:
            out.append(f"factor-connected {x},{y} at distance {d}")
        if same_class(graft, x, y) != (d == 0):
            out.append(f"relation and distance disagree on {x},{y}")
    return out


def _decompositions(graft: Graft, budget: Budget):
    pairs = [(j, r) for j in oracle.minimum_joins(graft) for r in graft.vertices]
    for join, root in budget.pick(pairs):
        yield sebo_decomposition(graft, join, root)


def check_distance_decomposition(graft: Graft, budget: Budget | None = None) -> list[str]:
    out = []
    for d in _decompositions(graft, budget or Budget()):
        for c in verify_sebo(d):
            if not c.passed:
                out.append(f"root {d.root}, F={sorted(d.join)}: ({c.item}) {c.detail}")
    return out


def check_matching_reduction(graft: Graft) -> list[str]:
    """With T = V on a factorizable graph, the partition matches the 1-factor one."""
    g = graft.graph
    if graft.terminals != frozenset(g.vertices) or not oracle.is_factorizable(g):
        return []
    out = []
    if set(oracle.minimum_joins(graft)) != set(oracle.perfect_matchings(g)):
        out.append("minimum joins differ from perfect matchings")
    mine = sorted(sorted(c) for c in kl_partition(graft).classes)
    ref = sorted(sorted(c) for c in oracle.matching_kl(g))
    if mine != ref:
        out.append(f"partition {mine} != 1-factor partition {ref}")
    return out


def check_refinement(graft: Graft) -> list[str]:
    return [
        f"component {sorted(e.component.vertices)} classes do not refine its own partition"
        for e in refinement_report(graft)
        if not e.refines
    ]


def _degree_in(graft, join, v):
    return sum(1 for eid in graft.graph.incident(v) if eid in join)


def check_comb_one_join(graft: Graft) -> list[str]:
    """For a bipartite graft and a color class B ⊆ T: ν = |B| iff every
    minimum join meets each vertex of B once iff some minimum join does."""
    sides = two_coloring(graft.graph)
    if sides is None or len(sides) != 1:
        return []
    x, y = sides[0]
    joins = oracle.minimum_joins(graft)
    views = {v.tooth for v in is_comb_bipartite(graft)}
    out = []
    for tooth in (x, y):
        if not tooth <= graft.terminals:
            continue
        by_nu = nu(graft) == len(tooth)
        once = [all(_degree_in(graft, j, v) == 1 for v in tooth) for j in joins]
        if not (by_nu == all(once) == any(once)):
            out.append(f"tooth {sorted(tooth)}: nu test {by_nu}, all {all(once)}, some {any(once)}")
        if by_nu != (tooth in views):
            out.append(f"tooth {sorted(tooth)}: recognizer disagrees")
    return out


def check_comb_paths(graft: Graft) -> list[str]:
    """In a comb-bipartite graft, a weight -1 spine-tooth path meets F once at each tooth on it."""
    out = []
    for view in is_comb_bipartite(graft):
        for join in oracle.minimum_joins(graft):
            w = JoinWeighting(graft.graph, join)
            for s in view.spine:
                for t in view.tooth:
                    for p in oracle.simple_paths(graft.graph, s, t):
                        if sum(w(e) for e in p.edges) != -1:
                            continue
                        for pos, v in enumerate(p.vertices):
                            if v not in view.tooth:
                                continue
                            around = p.edges[max(pos - 1, 0):pos + 1]
                            if sum(1 for e in around if e in join) != 1:
                                out.append(f"path {p.vertices} meets F {sum(1 for e in around if e in join)} times at {v}")
    return out


def check_factor_connected_nonpositive(graft: Graft) -> list[str]:
    out = []
    for h in factor_components(graft):
        for x, y in combinations(sorted(h.vertices, key=graft.graph.index), 2):
            if dist(graft, x, y) > 0:
                out.append(f"factor-connected {x},{y} at distance {dist(graft, x, y)}")
    return out


def check_comb_distance(graft: Graft) -> list[str]:
    """Factor-connected comb-bipartite: every spine-tooth distance is -1."""
    if len(factor_components(graft)) != 1:
        return []
    out = []
    for view in is_comb_bipartite(graft):
        for a in view.spine:
            for b in view.tooth:
                if dist(graft, a, b) != -1:
                    out.append(f"spine {a}, tooth {b}: distance {dist(graft, a, b)}")
    return out


def check_core_contains_component(graft: Graft, budget: Budget | None = None) -> list[str]:
    out = []
    for d in _decompositions(graft, budget or Budget()):
        h = factor_component_of(graft, d.root)
        if not h.vertices <= d.core:
            out.append(f"root {d.root}: component {sorted(h.vertices)} leaves the core")
            continue
        q = d.contracted_graft()
        image = d.image(h.vertices)
        home = [c for c in factor_components(q) if image <= c.vertices]
        if not home:
            out.append(f"root {d.root}: image {sorted(image, key=str)} not factor-connected")
    return out


def check_path_lifting(graft: Graft, budget: Budget | None = None) -> list[str]:
    out = []
    for d in _decompositions(graft, budget or Budget()):
        q = d.contracted
        for u in d.spine:
            for k in d.components:
                for p in oracle.simple_paths(q, u, k.block):
                    if sum(-1 if e in d.join else 1 for e in p.edges) != -1:
                        continue
                    for v in k.vertices:
                        try:
                            lifted = lift_negative_path(d, u, p.edges, v)
                        except GraftError as exc:
                            out.append(f"root {d.root}: lift {p.vertices} to {v}: {exc}")
                            continue
                        if lifted.ends != (u, v):
                            out.append(f"root {d.root}: lifted path has ends {lifted.ends}")
    return out


def check_comb_contracted(graft: Graft, budget: Budget | None = None) -> list[str]:
    """Run the comb-bipartite checks on every contracted graft the decompositions produce."""
    out = []
    for d in _decompositions(graft, budget or Budget()):
        q = d.contracted_graft()
        if len(q.edges) > oracle.DEFAULT_MAX_EDGES:
            continue
        for msg in check_comb_one_join(q) + check_comb_paths(q) + check_comb_distance(q):
            out.append(f"root {d.root}: {msg}")
    return out


CHECKS = {
    "oracle-equivalence": check_oracle_equivalence,
    "join-independence": check_join_independence,
    "circuit-criterion": check_circuit_criterion,
    "transitivity": check_transitivity,
    "relation-dichotomy": check_relation_dichotomy,
    "distance-decomposition": check_distance_decomposition,
    "matching-reduction": check_matching_reduction,
    "refinement": check_refinement,
    "comb-one-join": check_comb_one_join,
    "comb-paths": check_comb_paths,
    "comb-contracted": check_comb_contracted,
    "factor-connected-nonpositive": check_factor_connected_nonpositive,
    "comb-distance": check_comb_distance,
    "core-contains-component": check_core_contains_component,
    "path-lifting": check_path_lifting,
}

BUDGETED = {
    "distance-decomposition",
    "core-contains-component",
    "path-lifting",
    "comb-contracted",
}


def run_checks(graft: Graft, names=None, budget: Budget | None = None) -> dict[str, list[str]]:
    budget = budget or Budget()
    results = {}
    for name in names or CHECKS:
        fn = CHECKS[name]
        results[name] = fn(graft, budget) if name in BUDGETED else fn(graft)
    return results
