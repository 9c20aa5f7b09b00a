import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graftkl import (
    Graft,
    Graph,
    InputError,
    NotAGraftError,
    connected_components,
    contract,
    cut,
    induced_edges,
    is_graft,
    symmetric_difference,
)

from conftest import cycle4, es, path_abc


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, vertices=range(n))


def test_is_graft_examples():
    ab = Graph.from_edges([("a", "b")])
    assert is_graft(ab, "ab")
    assert not is_graft(ab, "a")
    assert not is_graft(Graph(["a", "b"]), "ab")


def test_is_graft_unknown_terminal():
    with pytest.raises(InputError):
        is_graft(Graph.from_edges([("a", "b")]), ["z"])


def test_graft_construction_names_component():
    with pytest.raises(NotAGraftError) as info:
        Graft.from_edges([("a", "b"), ("c", "d")], ["a", "c", "d"])
    assert info.value.component == ("a", "b")


def test_cut_examples():
    p = path_abc()
    assert cut(p.graph, {"b"}) == es(p, "ab", "bc")
    assert cut(p.graph, p.vertices) == frozenset()
    c = cycle4()
    assert cut(c.graph, {1, 2}) == es(c, (4, 1), (2, 3))


def test_induced_edges_examples():
    p = path_abc()
    assert induced_edges(p.graph, {"a", "b"}) == es(p, "ab")
    assert induced_edges(p.graph, set()) == frozenset()
    assert induced_edges(cycle4().graph, {1, 3}) == frozenset()


def test_contract_examples():
    p = path_abc()
    h, m = contract(p.graph, [{"b", "c"}])
    assert set(h.vertices) == {"a", "[b]"}
    assert m.vertex_map["b"] == m.vertex_map["c"] == "[b]"
    assert [(x.u, x.v) for x in h.edges] == [("a", "[b]")]

    h, m = contract(p.graph, [])
    assert set(h.edges) == set(p.edges)
    assert all(m.vertex_map[v] == v for v in p.vertices)

    c = cycle4()
    h, m = contract(c.graph, [{1, 2}])
    ends = sorted(tuple(sorted(map(str, (x.u, x.v)))) for x in h.edges)
    assert ends == [("3", "4"), ("3", "[1]"), ("4", "[1]")]
    assert m.dropped == es(c, (1, 2))


def test_contract_rejects_bad_parts():
    g = cycle4().graph
    with pytest.raises(InputError):
        contract(g, [{1, 2}, {2, 3}])
    with pytest.raises(InputError):
        contract(g, [{1, 3}])
    with pytest.raises(InputError):
        contract(g, [set()])


def test_contract_keeps_parallel_edges():
    g = cycle4().graph
    h, _ = contract(g, [{1, 3, 4}])
    assert h.contracted
    assert len(h.edges) == 2
    assert {x.id for x in h.edges} == {g.eid(1, 2), g.eid(2, 3)}


def test_simple_input_rejects_parallel_edges():
    with pytest.raises(InputError):
        Graph([1, 2], [(1, 2, 0), (2, 1, 1)])
    with pytest.raises(InputError):
        Graph([1], [(1, 1, 0)])


def test_components_examples():
    assert connected_components(Graph()) == []
    assert connected_components(path_abc().graph) == [frozenset("abc")]
    two = Graph.from_edges([(1, 2), (3, 4)])
    assert connected_components(two) == [frozenset({1, 2}), frozenset({3, 4})]


def test_symmetric_difference_examples():
    assert symmetric_difference("ac", "ac") == frozenset()
    assert symmetric_difference("ac", "") == frozenset("ac")
    assert symmetric_difference("ac", "ab") == frozenset("bc")


def test_empty_graft():
    g = Graft(Graph(), frozenset())
    assert g.vertices == ()


@given(graphs(), st.data())
def test_cut_is_complement_symmetric(g, data):
    xs = data.draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    rest = set(g.vertices) - xs
    assert cut(g, xs) == cut(g, rest)


@given(graphs(), st.data())
def test_inside_cut_outside_partition_edges(g, data):
    xs = data.draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    rest = set(g.vertices) - xs
    parts = [induced_edges(g, xs), cut(g, xs), induced_edges(g, rest)]
    assert sum(len(p) for p in parts) == len(g.edges)
    assert frozenset().union(*parts) == g.edge_ids


@given(graphs(), st.data())
def test_contraction_expands_back(g, data):
    comps = [c for c in connected_components(g) if data.draw(st.booleans())]
    h, m = contract(g, comps)
    for x in h.edges:
        orig = g.edge(x.id)
        assert {orig.u, orig.v} <= m.expand(x.u) | m.expand(x.v)
        assert orig.u in m.expand(x.u) or orig.u in m.expand(x.v)
    assert m.dropped | {x.id for x in h.edges} == g.edge_ids


@settings(max_examples=50)
@given(graphs(), st.data())
def test_is_graft_relabel_invariant(g, data):
    ts = data.draw(st.sets(st.sampled_from(g.vertices))) if g.vertices else set()
    perm = list(g.vertices)
    random.Random(data.draw(st.integers(0, 10**6))).shuffle(perm)
    relabel = dict(zip(g.vertices, perm))
    h = Graph(perm, [(relabel[x.u], relabel[x.v], x.id) for x in g.edges])
    assert is_graft(g, ts) == is_graft(h, {relabel[v] for v in ts})
