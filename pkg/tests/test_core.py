import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpbalance.core import (
    GPParams,
    Side,
    VertexId,
    adjacency,
    bfs_distances,
    edges,
    make_params,
    neighbors,
    oracle_diameter,
    oracle_diameter_full,
    oracle_distance,
)
from gpbalance.errors import InvalidParams
from helpers import gp_params


def as_networkx(p):
    g = nx.Graph()
    for a, b in edges(p):
        g.add_edge(a, b)
    return g


def test_make_params_valid():
    assert make_params(6, 2) == GPParams(6, 2)
    assert make_params(3, 1) == GPParams(3, 1)


@pytest.mark.parametrize("n,k", [(5, 3), (6, 3), (2, 1), (7, 0), (8, -1), (10, 5)])
def test_make_params_rejects(n, k):
    with pytest.raises(InvalidParams):
        make_params(n, k)


def test_indices_are_reduced():
    p = GPParams(6, 2)
    assert p.outer(-1) == VertexId(Side.OUTER, 5)
    assert p.inner(13) == VertexId(Side.INNER, 1)
    assert VertexId.parse("v-3", p) == p.inner(3)


def test_enumeration_order():
    p = GPParams(4, 1)
    labels = [str(v) for v in p.vertices()]
    assert labels == ["u0", "u1", "u2", "u3", "v0", "v1", "v2", "v3"]
    for pos, v in enumerate(p.vertices()):
        assert p.position(v) == pos
        assert p.vertex_at(pos) == v


def test_neighbors_examples():
    p = GPParams(6, 2)
    assert neighbors(p, p.outer(0)) == {p.outer(1), p.outer(5), p.inner(0)}
    assert neighbors(p, p.inner(0)) == {p.inner(2), p.inner(4), p.outer(0)}
    q = GPParams(3, 1)
    assert neighbors(q, q.inner(1)) == {q.inner(0), q.inner(2), q.outer(1)}


@given(gp_params())
def test_cubic_and_symmetric(p):
    for v in p.vertices():
        nb = neighbors(p, v)
        assert len(nb) == 3
        for w in nb:
            assert v in neighbors(p, w)
    assert len(edges(p)) == 3 * p.n


@given(gp_params())
def test_adjacency_matches_neighbors(p):
    adj = adjacency(p)
    for v in p.vertices():
        assert {p.vertex_at(b) for b in adj[p.position(v)]} == neighbors(p, v)


def test_bfs_examples():
    p = GPParams(6, 2)
    dm = bfs_distances(p, p.outer(0))
    assert dm[p.inner(3)] == 3
    assert dm[p.outer(0)] == 0
    assert bfs_distances(GPParams(5, 2), GPParams(5, 2).outer(0)).eccentricity() == 2


@settings(max_examples=40)
@given(gp_params(max_n=30))
def test_bfs_agrees_with_networkx(p):
    lengths = dict(nx.all_pairs_shortest_path_length(as_networkx(p)))
    for x in p.vertices():
        dm = bfs_distances(p, x)
        for y in p.vertices():
            assert dm[y] == lengths[x][y]


@given(gp_params())
def test_distance_map_invariants(p):
    for src in (p.outer(0), p.inner(0), p.inner(p.n // 2)):
        dm = bfs_distances(p, src)
        assert dm[src] == 0
        assert min(dm.dist) >= 0
        for a, b in edges(p):
            assert abs(dm[a] - dm[b]) <= 1


def test_oracle_distance_examples():
    p = GPParams(6, 2)
    assert oracle_distance(p, p.outer(0), p.inner(3)) == 3
    assert oracle_distance(p, p.inner(4), p.inner(4)) == 0
    q = GPParams(50, 9)
    assert oracle_distance(q, q.outer(0), q.inner(23)) == 4


@settings(max_examples=30)
@given(gp_params(max_n=20), st.data())
def test_metric_axioms(p, data):
    vs = list(p.vertices())
    x, y, z = (data.draw(st.sampled_from(vs)) for _ in range(3))
    dxy = oracle_distance(p, x, y)
    assert dxy == oracle_distance(p, y, x)
    assert (dxy == 0) == (x == y)
    assert dxy <= oracle_distance(p, x, z) + oracle_distance(p, z, y)


@pytest.mark.parametrize("n,k,expected", [(6, 2, 4), (7, 3, 3), (12, 5, 4), (5, 2, 2)])
def test_oracle_diameter_examples(n, k, expected):
    assert oracle_diameter(GPParams(n, k)) == expected


@given(gp_params(max_n=30), st.data())
def test_rotation_and_reflection(p, data):
    a = data.draw(st.integers(0, p.n - 1))
    b = data.draw(st.integers(0, p.n - 1))
    for make in (p.outer, p.inner):
        assert oracle_distance(p, p.outer(a), make(b)) == oracle_distance(
            p, p.outer(a + 1), make(b + 1)
        )
        assert oracle_distance(p, p.outer(0), make(b)) == oracle_distance(p, p.outer(0), make(-b))


def test_two_source_diameter_equals_full():
    for n in range(3, 31):
        for k in range(1, (n + 1) // 2):
            p = GPParams(n, k)
            assert oracle_diameter(p) == oracle_diameter_full(p), p
