from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graftkl import Graft, Graph, InputError, allowed_edges, is_join, is_minimum_join, min_join, nu
from graftkl.graph import connected_components, symmetric_difference
from graftkl.joins import nu_of

from conftest import cycle4, es, k2, path_abc, star3, triangle


def all_joins(graft):
    """Plain subset enumeration, independent of the package's scan kernel."""
    ids = [x.id for x in graft.edges]
    out = []
    for r in range(len(ids) + 1):
        for sub in combinations(ids, r):
            if is_join(graft, sub):
                out.append(frozenset(sub))
    return out


def brute_nu(graft):
    return min(len(j) for j in all_joins(graft))


def test_is_join_examples():
    p = path_abc()
    assert is_join(p, es(p, "ab", "bc"))
    assert not is_join(p, es(p, "ab"))
    t = triangle()
    assert is_join(t, frozenset())


def test_is_join_rejects_foreign_edges():
    with pytest.raises(InputError):
        is_join(path_abc(), {99})


def test_min_join_examples():
    g = k2()
    cert = min_join(g)
    assert (cert.size, cert.edges, cert.minimum) == (1, es(g, "ab"), True)

    p = path_abc()
    assert all_joins(p) == [es(p, "ab", "bc")]
    assert min_join(p).edges == es(p, "ab", "bc")

    c = cycle4()
    matchings = {es(c, (1, 2), (3, 4)), es(c, (2, 3), (4, 1))}
    assert {j for j in all_joins(c) if len(j) == 2} == matchings
    assert min_join(c).size == 2
    assert min_join(c).edges in matchings


def test_min_join_tie_break_is_lexicographic():
    c = cycle4()
    assert min_join(c).edges == es(c, (1, 2), (3, 4))
    assert min_join(c).edges == min_join(cycle4()).edges


def test_nu_examples():
    assert nu(triangle()) == 0
    p = path_abc()
    assert brute_nu(p) == 2
    assert nu(p) == 2
    s = star3()
    assert brute_nu(s) == 3
    assert nu(s) == 3


def test_is_minimum_join_examples():
    p = path_abc()
    assert is_minimum_join(p, es(p, "ab", "bc"))
    c = cycle4()
    assert not is_minimum_join(c, c.graph.edge_ids)
    assert is_minimum_join(triangle(), frozenset())


def test_allowed_edges_examples():
    p = path_abc()
    assert allowed_edges(p) == es(p, "ab", "bc")
    c = cycle4()
    assert allowed_edges(c) == c.graph.edge_ids
    assert allowed_edges(triangle()) == frozenset()


def test_nu_of_non_graft_is_infinite():
    g = Graph.from_edges([(1, 2), (3, 4)])
    assert nu_of(g, {1, 3}) == float("inf")


def test_large_terminal_sets_use_blossom():
    # a 24-vertex cycle with every vertex a terminal exceeds the DP bound
    n = 24
    g = Graft.from_edges([(i, (i + 1) % n) for i in range(n)], range(n))
    cert = min_join(g)
    assert cert.size == 12
    assert is_join(g, cert.edges)


@st.composite
def small_grafts(draw, max_n=6, max_m=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    g = Graph.from_edges(chosen, vertices=range(n))
    terms = set(draw(st.sets(st.integers(0, n - 1))))
    for comp in connected_components(g):
        if len(comp & terms) % 2:
            terms ^= {min(comp)}
    return Graft(g, frozenset(terms))


@settings(max_examples=120)
@given(small_grafts())
def test_nu_matches_subset_enumeration(g):
    joins = all_joins(g)
    low = min(len(j) for j in joins)
    assert nu(g) == low
    assert is_minimum_join(g, min_join(g).edges)
    assert allowed_edges(g) == frozenset().union(*(j for j in joins if len(j) == low))


@settings(max_examples=60)
@given(small_grafts())
def test_symmetric_difference_of_joins_is_even(g):
    joins = all_joins(g)
    for a in joins[:6]:
        for b in joins[:6]:
            assert is_join(Graft(g.graph, frozenset()), symmetric_difference(a, b))


@settings(max_examples=60)
@given(small_grafts())
def test_factorizable_full_terminals_gives_perfect_matchings(g):
    if any(len(c) % 2 for c in connected_components(g.graph)):
        return
    full = Graft(g.graph, frozenset(g.vertices))
    perfect = {
        j for j in all_joins(full)
        if all(sum(1 for eid in g.graph.incident(v) if eid in j) == 1 for v in g.vertices)
    }
    if not perfect:
        return
    minimum = {j for j in all_joins(full) if len(j) == nu(full)}
    assert minimum == perfect
