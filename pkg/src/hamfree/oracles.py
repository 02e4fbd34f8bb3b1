"""Slow reference implementations used to cross-check the fast solvers.

Everything here is deliberately naive: plain sets and lists, exhaustive
enumeration, no pruning shared with the main algorithms. The harness uses
these to re-validate every reported violation, so they must stay
independent of the code paths they check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

from .graph import Graph

__all__ = [
    "brute_force_contains_induced",
    "exhaustive_toughness",
    "held_karp_hamiltonian",
    "brute_force_independence",
    "brute_force_connectivity",
    "brute_force_in_aleph",
    "check_aleph_cert",
]


def _nbrs(G: Graph) -> list[set[int]]:
    return [{u for u in range(G.n) if G.adj[v] >> u & 1} for v in range(G.n)]


def brute_force_contains_induced(G: Graph, H: Graph) -> bool:
    """Try every vertex subset of size ``|H|`` and every bijection onto it."""
    k = H.n
    if k > G.n:
        return False
    N = _nbrs(G)
    h_edges = {(p, q) for p in range(k) for q in range(p + 1, k) if H.has_edge(p, q)}
    h_degs = sorted(H.degrees())
    for subset in combinations(range(G.n), k):
        sub = set(subset)
        degs = sorted(len(N[v] & sub) for v in subset)
        if degs != h_degs:
            continue
        for image in permutations(subset):
            if all(
                ((p, q) in h_edges) == (image[q] in N[image[p]])
                for p in range(k)
                for q in range(p + 1, k)
            ):
                return True
    return False


def _count_components(N: list[set[int]], keep: set[int]) -> int:
    seen: set[int] = set()
    count = 0
    for v in keep:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in N[u]:
                if w in keep and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def exhaustive_toughness(G: Graph):
    """Minimum of ``|S| / s(G - S)`` over all ``S`` with at least two components left.

    Returns ``math.inf`` when no such ``S`` exists (complete graphs).
    """
    N = _nbrs(G)
    best = None
    verts = range(G.n)
    for k in range(G.n + 1):
        for S in combinations(verts, k):
            keep = set(verts) - set(S)
            c = _count_components(N, keep)
            if c > 1:
                r = Fraction(k, c)
                if best is None or r < best:
                    best = r
    return float("inf") if best is None else best


def held_karp_hamiltonian(G: Graph) -> bool:
    """Bitmask DP over (visited set, end vertex) for a Hamilton cycle through vertex 0."""
    n = G.n
    if n == 0:
        return False
    if n == 1:
        return True
    if n == 2:
        return G.has_edge(0, 1)
    N = _nbrs(G)
    # reach[mask] = set of end vertices of paths from 0 covering exactly mask
    reach = [0] * (1 << n)
    reach[1] = 1
    for mask in range(1, 1 << n):
        if not mask & 1 or not reach[mask]:
            continue
        ends = reach[mask]
        for v in range(n):
            if ends >> v & 1:
                for u in N[v]:
                    if not mask >> u & 1:
                        reach[mask | 1 << u] |= 1 << u
    full = (1 << n) - 1
    return any(reach[full] >> v & 1 and 0 in N[v] for v in range(1, n))


def brute_force_independence(G: Graph) -> int:
    N = _nbrs(G)
    for k in range(G.n, 0, -1):
        for S in combinations(range(G.n), k):
            if all(b not in N[a] for a, b in combinations(S, 2)):
                return k
    return 0


def brute_force_connectivity(G: Graph) -> int:
    """Smallest ``|S|`` leaving a disconnected graph; ``n - 1`` if none exists."""
    N = _nbrs(G)
    verts = set(range(G.n))
    for k in range(G.n - 1):
        for S in combinations(range(G.n), k):
            if _count_components(N, verts - set(S)) > 1:
                return k
    return G.n - 1


def brute_force_in_aleph(G: Graph) -> bool:
    """Recursive search over every bipartition of every residual vertex set."""
    N = _nbrs(G)

    def independent(S) -> bool:
        return all(b not in N[a] for a, b in combinations(S, 2))

    @lru_cache(maxsize=None)
    def member(R: frozenset) -> bool:
        if independent(R):
            return True
        if all(b in N[a] for a, b in combinations(R, 2)):
            return True
        items = sorted(R)
        for k in range(1, len(items)):
            for V1 in combinations(items, k):
                V2 = R - set(V1)
                if independent(V1) and all(N[v] & R == V2 for v in V1) and member(frozenset(V2)):
                    return True
        return False

    return G.n > 0 and member(frozenset(range(G.n)))


def check_aleph_cert(G: Graph, cert) -> str | None:
    """Validate an ℵ certificate layer by layer; return a reason if it fails."""
    N = _nbrs(G)

    def members(mask: int) -> set[int]:
        return {v for v in range(G.n) if mask >> v & 1}

    residual = set(range(G.n))
    for i, layer_mask in enumerate(cert.layers):
        layer = members(layer_mask)
        if not layer:
            return f"layer {i} is empty"
        if not layer <= residual:
            return f"layer {i} leaves the residual graph"
        rest = residual - layer
        if not rest:
            return f"layer {i} exhausts the residual graph"
        for a, b in combinations(layer, 2):
            if b in N[a]:
                return f"layer {i} has edge {a}-{b}"
        for v in layer:
            if N[v] & residual != rest:
                return f"vertex {v} of layer {i} does not see exactly the remaining vertices"
        residual = rest
    terminal = members(cert.terminal_set)
    if terminal != residual:
        return "terminal set differs from the residual graph"
    pairs = list(combinations(terminal, 2))
    if cert.terminal == "independent":
        if any(b in N[a] for a, b in pairs):
            return "terminal set is not independent"
    elif cert.terminal == "complete":
        if any(b not in N[a] for a, b in pairs):
            return "terminal set is not complete"
    else:
        return f"unknown terminal tag {cert.terminal!r}"
    return None
