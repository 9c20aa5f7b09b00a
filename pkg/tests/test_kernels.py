"""The compiled and pure-Python kernels must agree on every input."""

import importlib
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graftkl import _pykernels as py

try:
    c = importlib.import_module("graftkl._ckernels")
except ImportError:  # pragma: no cover
    c = None

needs_ext = pytest.mark.skipif(c is None, reason="compiled extension not built")


@st.composite
def edge_lists(draw, max_n=7, max_m=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    tails = [a for a, _ in chosen]
    heads = [b for _, b in chosen]
    return n, tails, heads


def brute_table(n, tails, heads):
    table = {}
    m = len(tails)
    for mask in range(1 << m):
        odd = 0
        for k in range(m):
            if mask >> k & 1:
                odd ^= (1 << tails[k]) | (1 << heads[k])
        size = bin(mask).count("1")
        table[odd] = min(table.get(odd, size), size)
    return [table.get(t, -1) for t in range(1 << n)]


@given(edge_lists())
def test_size_table_matches_direct_enumeration(g):
    assert py.join_size_table(*g) == brute_table(*g)


@needs_ext
@settings(max_examples=150)
@given(edge_lists(), st.data())
def test_backends_agree(g, data):
    n, tails, heads = g
    assert c.all_pairs_bfs(n, tails, heads) == py.all_pairs_bfs(n, tails, heads)
    assert c.join_size_table(n, tails, heads) == py.join_size_table(n, tails, heads)
    target = data.draw(st.integers(0, (1 << n) - 1))
    assert c.scan_joins(n, tails, heads, target) == py.scan_joins(n, tails, heads, target)
    weights = data.draw(st.lists(st.sampled_from([-1, 1]), min_size=len(tails), max_size=len(tails)))
    src = data.draw(st.integers(0, n - 1))
    assert c.path_minima(n, tails, heads, weights, src) == py.path_minima(n, tails, heads, weights, src)
    assert c.min_circuit(n, tails, heads, weights) == py.min_circuit(n, tails, heads, weights)
    dist = py.all_pairs_bfs(n, tails, heads)
    terms = sorted(data.draw(st.sets(st.integers(0, n - 1))))
    assert c.pair_matching(dist, terms) == py.pair_matching(dist, terms)


@pytest.mark.parametrize("k", [py, pytest.param(c, marks=needs_ext)], ids=["python", "cython"])
def test_pair_matching_tie_break(k):
    # 4-cycle 0-1-2-3: pairings {01,23} and {03,12} both cost 2
    dist = [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
    assert k.pair_matching(dist, [0, 1, 2, 3]) == (2, [(0, 1), (2, 3)])
    assert k.pair_matching(dist, [0, 1, 2]) == (-1, [])
    assert k.pair_matching(dist, []) == (0, [])


@pytest.mark.parametrize("k", [py, pytest.param(c, marks=needs_ext)], ids=["python", "cython"])
def test_pair_matching_unreachable(k):
    dist = [[0, -1], [-1, 0]]
    assert k.pair_matching(dist, [0, 1]) == (-1, [])


@pytest.mark.parametrize("k", [py, pytest.param(c, marks=needs_ext)], ids=["python", "cython"])
def test_min_circuit_examples(k):
    tri = (3, [0, 1, 0], [1, 2, 2])
    assert k.min_circuit(*tri, [1, 1, 1]) == 3
    assert k.min_circuit(*tri, [-1, -1, 1]) == -1
    assert k.min_circuit(2, [0], [1], [1]) is None
    # parallel edges close a 2-edge circuit
    assert k.min_circuit(2, [0, 0], [1, 1], [-1, 1]) == 0


@pytest.mark.parametrize("k", [py, pytest.param(c, marks=needs_ext)], ids=["python", "cython"])
def test_path_minima_examples(k):
    # path 0-1-2 with both edges weighted -1
    assert k.path_minima(3, [0, 1], [1, 2], [-1, -1], 0) == [0, -1, -2]
    assert k.path_minima(3, [0], [1], [1], 0) == [0, 1, None]


def test_selector_reports_backend():
    from graftkl import kernels

    assert kernels.BACKEND in ("cython", "python")
    if c is not None:
        assert kernels.BACKEND == "cython" or kernels._impl is py
