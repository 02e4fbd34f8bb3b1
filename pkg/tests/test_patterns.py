import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamfree.graph import complete, complete_bipartite, h1, path, petersen, star
from hamfree.invariants import is_complete
from hamfree.oracles import brute_force_contains_induced
from hamfree.patterns import CATALOG, contains_induced, is_free, is_induced_embedding, pattern

from .strategies import graphs

EXPECTED_IDS = {
    "K1+P2", "K1+P3", "K1+P4", "K1+P5", "K1+P6", "K2+P3", "2K2", "K2+K3",
    "K1+K1,3", "P3", "P4", "K1,3", "K1,3+e", "2K1", "3K1",
}


def test_catalog_contents():
    assert set(CATALOG) == EXPECTED_IDS
    assert all(p.graph.n <= 7 for p in CATALOG.values())
    shapes = {pid: (p.graph.n, p.graph.m, sorted(p.graph.degrees())) for pid, p in CATALOG.items()}
    assert shapes["K1+P2"] == (3, 1, [0, 1, 1])
    assert shapes["K1+P6"] == (7, 5, [0, 1, 1, 2, 2, 2, 2])
    assert shapes["K2+P3"] == (5, 3, [1, 1, 1, 1, 2])
    assert shapes["2K2"] == (4, 2, [1, 1, 1, 1])
    assert shapes["K2+K3"] == (5, 4, [1, 1, 2, 2, 2])
    assert shapes["K1+K1,3"] == (5, 3, [0, 1, 1, 1, 3])
    assert shapes["K1,3+e"] == (4, 4, [1, 2, 2, 3])
    assert shapes["3K1"] == (3, 0, [0, 0, 0])


def test_aliases():
    assert pattern("K2+K2") is CATALOG["2K2"]
    assert pattern("claw") is CATALOG["K1,3"]
    assert pattern("K1+K1+K1") is CATALOG["3K1"]
    with pytest.raises(ValueError):
        pattern("K9")


def test_examples():
    assert contains_induced(complete_bipartite(2, 3), "K1+P2") is None
    emb = contains_induced(h1(), "K1+P4")
    assert emb is not None and is_induced_embedding(h1(), pattern("K1+P4").graph, emb)
    assert contains_induced(complete(3), "2K1") is None
    assert is_free(h1(), ["K2+P3"])
    assert is_free(h1(), ["K1+K1,3"])
    assert is_free(petersen(), ["K2+K3"])


def test_h1_named_embedding_is_valid():
    # path x3 x2 x1 x7 plus isolated x5
    assert is_induced_embedding(h1(), pattern("K1+P4").graph, (4, 2, 1, 0, 6))


def test_pattern_larger_than_host():
    assert contains_induced(path(2), "K1+P6") is None


def test_matcher_agrees_with_brute_force_upto7(graphs_upto7):
    for G in graphs_upto7:
        for p in CATALOG.values():
            emb = contains_induced(G, p)
            assert (emb is not None) == brute_force_contains_induced(G, p.graph), (G, p.id)
            if emb is not None:
                assert is_induced_embedding(G, p.graph, emb)


def test_matcher_agrees_with_brute_force_n8_sample(graphs_n8):
    sample = random.Random(8).sample(graphs_n8, 300)
    for G in sample:
        for p in CATALOG.values():
            assert (contains_induced(G, p) is not None) == brute_force_contains_induced(G, p.graph)


def test_two_k1_free_iff_complete(graphs_upto7, graphs_n8):
    for G in graphs_upto7 + graphs_n8:
        assert is_free(G, "2K1") == is_complete(G)


@given(graphs(max_n=9), st.randoms(use_true_random=False), st.sampled_from(sorted(EXPECTED_IDS)))
@settings(max_examples=150, deadline=None)
def test_freeness_is_isomorphism_invariant(G, r, pid):
    perm = list(range(G.n))
    r.shuffle(perm)
    assert is_free(G, pid) == is_free(G.relabel(perm), pid)


def test_star_contains_claw():
    assert contains_induced(star(5), "K1,3") is not None
    assert contains_induced(star(5), "K1,3+e") is None
