"""Immutable small graphs with bitset adjacency.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` bitmask: bit ``v``
set means ``v`` is in the set. Every algorithm in the package works on these
masks, so a neighbourhood intersection is a single ``&``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "VertexSet",
    "bits",
    "mask_of",
    "complete",
    "empty",
    "path",
    "cycle",
    "complete_bipartite",
    "star",
    "claw_plus_e",
    "petersen",
    "h1",
    "disjoint_union",
    "construct",
    "components",
    "is_connected",
    "is_independent",
    "is_clique",
    "random_graph",
]

MAX_VERTICES = 64

VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex indices in ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` vertices.

    ``adj[v]`` is the neighbour bitmask of ``v``. Instances are validated on
    construction (symmetric, loop-free, bits below ``n``) and never mutated.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> int:
        """Mask of all vertices."""
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def induced(self, mask: int) -> Graph:
        """Subgraph induced by ``mask``, relabelled to ``0..k-1`` in ascending order."""
        keep = list(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(mask_of(index[u] for u in bits(self.adj[v] & mask)))
        return Graph(len(keep), tuple(adj))

    def delete(self, mask: int) -> Graph:
        """``G \\ S``: the graph with the vertices in ``mask`` removed."""
        return self.induced(self.vertices & ~mask)

    def complement(self) -> Graph:
        full = self.vertices
        return Graph(self.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = mask_of(perm[u] for u in bits(self.adj[v]))
        return Graph(self.n, tuple(adj))

    def add_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def components(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as masks, ordered by smallest vertex."""
    rest = G.vertices if within is None else within
    adj = G.adj
    out = []
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def count_components(G: Graph, within: int) -> int:
    count = 0
    adj = G.adj
    rest = within
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        rest &= ~comp
        count += 1
    return count


def is_connected(G: Graph, within: int | None = None) -> bool:
    mask = G.vertices if within is None else within
    return count_components(G, mask) <= 1


def is_independent(G: Graph, mask: int) -> bool:
    return all(not G.adj[v] & mask for v in bits(mask))


def is_clique(G: Graph, mask: int) -> bool:
    return all((G.adj[v] | 1 << v) & mask == mask for v in bits(mask))


# --- named graphs -----------------------------------------------------------

def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"size {n} outside 1..{MAX_VERTICES}")


def complete(n: int) -> Graph:
    _check_size(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _check_size(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle graph needs at least 3 vertices")
    _check_size(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    _check_size(a + b)
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """``K_{1,k}``; vertex 0 is the centre."""
    return complete_bipartite(1, k)


def claw_plus_e() -> Graph:
    """The claw ``K_{1,3}`` plus one edge between two leaves (centre 0, leaves 1..3)."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes ``i -- i+5``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def h1() -> Graph:
    """Six-cycle x1..x6 plus x7 joined to x1, x4 and the chord x2x6.

    Vertex ``i`` is ``x(i+1)``, so x7 is vertex 6.
    """
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6, 0), (6, 3), (1, 5)]
    return Graph.from_edges(7, edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` followed by ``H`` with H's vertices shifted by ``G.n``."""
    if G.n + H.n > MAX_VERTICES:
        raise ValueError(f"union has {G.n + H.n} vertices, more than {MAX_VERTICES}")
    return Graph(G.n + H.n, G.adj + tuple(nb << G.n for nb in H.adj))


_CONSTRUCTORS = {
    "complete": complete,
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "claw_plus_e": claw_plus_e,
    "petersen": petersen,
    "h1": h1,
    "disjoint_union": disjoint_union,
}


def construct(name: str, *args) -> Graph:
    """Build a named graph, e.g. ``construct("complete_bipartite", 2, 3)``."""
    try:
        fn = _CONSTRUCTORS[name]
    except KeyError:
        raise ValueError(f"unknown graph name {name!r}") from None
    return fn(*args)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawn from ``rng``."""
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
