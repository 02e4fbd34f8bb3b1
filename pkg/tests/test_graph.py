from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamfree.graph import (
    Graph,
    bits,
    claw_plus_e,
    complete,
    complete_bipartite,
    components,
    construct,
    cycle,
    disjoint_union,
    empty,
    h1,
    is_connected,
    mask_of,
    path,
    petersen,
    star,
)

from .strategies import graphs


def girth(G):
    best = None
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: None}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    c = dist[u] + dist[w] + 1
                    best = c if best is None else min(best, c)
    return best


def test_h1_shape():
    G = h1()
    assert (G.n, G.m) == (7, 9)
    assert G.degrees() == [3, 3, 2, 3, 2, 3, 2]


def test_petersen_shape():
    G = petersen()
    assert (G.n, G.m) == (10, 15)
    assert set(G.degrees()) == {3}
    assert girth(G) == 5


def test_named_constructions():
    assert complete(5).m == 10
    assert empty(4).m == 0
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(5).m == 5
    assert complete_bipartite(2, 3).m == 6
    assert star(3).degrees() == [3, 1, 1, 1]
    assert sorted(claw_plus_e().degrees()) == [1, 2, 2, 3]
    assert construct("complete_bipartite", 2, 3) == complete_bipartite(2, 3)
    with pytest.raises(ValueError):
        construct("hypercube", 3)


def test_disjoint_union():
    G = disjoint_union(complete(1), path(2))
    assert (G.n, G.m) == (3, 1)
    assert len(components(G)) == 2
    assert G.edges() == [(1, 2)]
    with pytest.raises(ValueError):
        disjoint_union(complete(40), complete(30))


def test_components_examples():
    assert components(empty(3)) == [0b001, 0b010, 0b100]
    assert len(components(petersen())) == 1
    sizes = sorted(m.bit_count() for m in components(disjoint_union(complete(2), path(3))))
    assert sizes == [2, 3]


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        Graph(2, (0b110, 0b001))  # bit beyond n
    with pytest.raises(ValueError):
        Graph.from_edges(65, [])
    with pytest.raises(ValueError):
        complete(0)


@given(graphs())
def test_components_partition(G):
    parts = components(G)
    union = 0
    for p in parts:
        assert union & p == 0
        union |= p
        assert is_connected(G, p)
        assert all(not G.adj[v] & (G.vertices & ~p) for v in bits(p))
    assert union == G.vertices


@given(graphs(), st.randoms(use_true_random=False))
@settings(max_examples=50)
def test_relabel_preserves_structure(G, r):
    perm = list(range(G.n))
    r.shuffle(perm)
    H = G.relabel(perm)
    assert H.m == G.m
    assert sorted(H.degrees()) == sorted(G.degrees())
    assert all(H.has_edge(perm[u], perm[v]) for u, v in G.edges())


def test_induced_and_delete():
    G = cycle(5)
    assert G.induced(mask_of([0, 1, 2])).edges() == [(0, 1), (1, 2)]
    assert G.delete(mask_of([0])) == path(4)
    assert complete(4).complement() == empty(4)
