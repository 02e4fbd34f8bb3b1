import random
from itertools import combinations

import pytest

from hamfree.cycles import (
    CycleCert,
    InvalidCycleError,
    hamiltonian_cycle,
    is_dominating,
    longest_cycle,
)
from hamfree.graph import (
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    h1,
    path,
    petersen,
    random_graph,
    star,
)
from hamfree.oracles import held_karp_hamiltonian


def brute_longest(G):
    """Longest cycle length by trying every vertex subset and ordering (n <= 7)."""
    from itertools import permutations

    best = 0
    for k in range(3, G.n + 1):
        for sub in combinations(range(G.n), k):
            first, rest = sub[0], sub[1:]
            if any(
                all(G.has_edge(a, b) for a, b in zip((first,) + p, p + (first,)))
                for p in permutations(rest)
            ):
                best = k
                break
    return best


def test_hamiltonian_examples():
    assert hamiltonian_cycle(petersen()) is None
    assert hamiltonian_cycle(h1()) is None
    assert hamiltonian_cycle(complete(1)) == CycleCert((0,))
    assert hamiltonian_cycle(complete(2)) == CycleCert((0, 1))
    assert hamiltonian_cycle(empty(2)) is None
    C = hamiltonian_cycle(complete(3))
    assert len(C) == 3 and C.is_valid(complete(3))
    assert hamiltonian_cycle(complete_bipartite(3, 3)) is not None


def test_backtracking_matches_dp_random():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(1, 12)
        G = random_graph(n, rng.choice([0.2, 0.35, 0.5, 0.7, 0.9]), rng)
        C = hamiltonian_cycle(G)
        assert (C is not None) == held_karp_hamiltonian(G)
        if C is not None:
            C.validate(G)
            assert len(C) == n


def test_backtracking_matches_dp_exhaustive(graphs_upto7):
    for G in graphs_upto7:
        C = hamiltonian_cycle(G)
        assert (C is not None) == held_karp_hamiltonian(G)


def test_longest_cycle_examples():
    P = petersen()
    C = longest_cycle(P)
    assert len(C) == 9 and C.is_valid(P)
    assert longest_cycle(star(4)) is None
    assert longest_cycle(path(6)) is None
    assert len(longest_cycle(cycle(6).add_edge(0, 3))) == 6


def test_longest_cycle_against_brute_force(graphs_upto7):
    for G in graphs_upto7:
        if G.n > 6:
            continue
        C = longest_cycle(G)
        expected = brute_longest(G)
        assert (0 if C is None else len(C)) == expected
        if C is not None:
            C.validate(G)


def test_longest_cycle_consistency(graphs_upto7):
    for G in graphs_upto7:
        if G.n < 3:
            continue
        C = longest_cycle(G)
        # a forest has exactly n - c edges
        has_cycle = G.m > G.n - len(components(G))
        assert (C is not None) == has_cycle
        if C is not None:
            assert len(C) >= 3
            assert (len(C) == G.n) == (hamiltonian_cycle(G) is not None)


def test_adding_edges_never_shortens_longest_cycle():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(4, 9)
        G = random_graph(n, 0.3, rng)
        before = longest_cycle(G)
        missing = [(u, v) for u, v in combinations(range(n), 2) if not G.has_edge(u, v)]
        if not missing:
            continue
        H = G.add_edge(*rng.choice(missing))
        after = longest_cycle(H)
        assert (0 if after is None else len(after)) >= (0 if before is None else len(before))


def test_longest_cycle_deterministic():
    assert longest_cycle(petersen()) == longest_cycle(petersen())


def test_dominating_examples():
    K = complete_bipartite(2, 3)
    assert is_dominating(K, CycleCert((0, 2, 1, 3)))
    assert is_dominating(h1(), CycleCert((0, 1, 2, 3, 4, 5)))
    G = disjoint_union(complete(3), complete(2))
    assert not is_dominating(G, CycleCert((0, 1, 2)))
    with pytest.raises(InvalidCycleError):
        is_dominating(K, CycleCert((0, 1, 2)))


def test_certificate_validation():
    G = cycle(5)
    CycleCert((0, 1, 2, 3, 4)).validate(G)
    CycleCert((2,)).validate(G)
    CycleCert((2, 3)).validate(G)
    for bad in [(), (0, 2), (0, 1, 1), (0, 1, 2), (0, 9)]:
        with pytest.raises(InvalidCycleError):
            CycleCert(bad).validate(G)


def test_successor_queries():
    C = CycleCert((4, 1, 3, 0))
    assert C.successor(4) == 1
    assert C.successor(0) == 4
    assert C.successor(1, 2) == 0
    assert C.predecessor(4) == 0
    assert C.predecessor(3, 3) == 0
    assert C.shift({4, 3}) == {1, 0}
    assert C.rotated(3).seq == (3, 0, 4, 1)
    assert C.reversed().seq == (4, 0, 3, 1)
    assert str(C) == "4,1,3,0"
