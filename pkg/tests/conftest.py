import pytest

from graftkl import Graft


def path_abc():
    return Graft.from_edges([("a", "b"), ("b", "c")], "ac")


def cycle4():
    return Graft.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)], [1, 2, 3, 4])


def star3():
    return Graft.from_edges([("c", "l1"), ("c", "l2"), ("c", "l3")], ["c", "l1", "l2", "l3"])


def triangle(terminals=()):
    return Graft.from_edges([("a", "b"), ("b", "c"), ("c", "a")], terminals)


def k2():
    return Graft.from_edges([("a", "b")], "ab")


def e(graft, u, v):
    return graft.graph.eid(u, v)


def es(graft, *pairs):
    return frozenset(e(graft, u, v) for u, v in pairs)


@pytest.fixture
def path():
    return path_abc()


@pytest.fixture
def c4():
    return cycle4()


@pytest.fixture
def star():
    return star3()
