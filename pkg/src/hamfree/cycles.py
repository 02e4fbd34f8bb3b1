"""Hamilton cycles, longest cycles and dominating cycles.

A single vertex counts as a cycle of length 1 and a single edge as a cycle of
length 2, so ``K1`` and ``K2`` are hamiltonian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, is_connected

__all__ = [
    "InvalidCycleError",
    "CycleCert",
    "hamiltonian_cycle",
    "longest_cycle",
    "is_dominating",
]


class InvalidCycleError(ValueError):
    """A cycle certificate does not describe a cycle of the given graph."""


@dataclass(frozen=True)
class CycleCert:
    """Vertex sequence ``v1..vt`` of a cycle, closed implicitly by ``vt v1``."""

    seq: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.seq)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.seq:
            m |= 1 << v
        return m

    def index(self, x: int) -> int:
        return self.seq.index(x)

    def successor(self, x: int, h: int = 1) -> int:
        """``x^{+h}`` along the stored orientation."""
        return self.seq[(self.seq.index(x) + h) % len(self.seq)]

    def predecessor(self, x: int, h: int = 1) -> int:
        return self.successor(x, -h)

    def shift(self, xs, h: int = 1) -> set[int]:
        """``X^{+h}`` for a set of cycle vertices."""
        return {self.successor(x, h) for x in xs}

    def rotated(self, start: int) -> CycleCert:
        i = self.seq.index(start)
        return CycleCert(self.seq[i:] + self.seq[:i])

    def reversed(self) -> CycleCert:
        return CycleCert(self.seq[:1] + self.seq[:0:-1])

    def validate(self, G: Graph) -> None:
        seq = self.seq
        if not seq:
            raise InvalidCycleError("empty cycle")
        if len(set(seq)) != len(seq):
            raise InvalidCycleError(f"repeated vertex in {seq}")
        if any(not 0 <= v < G.n for v in seq):
            raise InvalidCycleError(f"vertex out of range in {seq}")
        t = len(seq)
        if t == 2 and not G.has_edge(*seq):
            raise InvalidCycleError(f"{seq[0]}-{seq[1]} is not an edge")
        if t >= 3:
            for i in range(t):
                if not G.has_edge(seq[i], seq[(i + 1) % t]):
                    raise InvalidCycleError(f"{seq[i]}-{seq[(i + 1) % t]} is not an edge")

    def is_valid(self, G: Graph) -> bool:
        try:
            self.validate(G)
        except InvalidCycleError:
            return False
        return True

    def __str__(self) -> str:
        return ",".join(map(str, self.seq))


def _has_cut_vertex(G: Graph) -> bool:
    full = G.vertices
    return any(not is_connected(G, full & ~(1 << v)) for v in range(G.n))


def hamiltonian_cycle(G: Graph) -> CycleCert | None:
    """Find a Hamilton cycle by backtracking, or return ``None``.

    Pruning: every unvisited vertex needs two usable neighbours, a vertex
    with exactly two is forced next when it touches the path end, and the
    unvisited part plus the start vertex must stay connected.
    """
    n = G.n
    if n == 0:
        return None
    if n == 1:
        return CycleCert((0,))
    if n == 2:
        return CycleCert((0, 1)) if G.has_edge(0, 1) else None
    adj = G.adj
    if min(G.degrees()) < 2 or not is_connected(G) or _has_cut_vertex(G):
        return None
    start = min(range(n), key=lambda v: (G.degree(v), v))
    full = G.vertices
    sbit = 1 << start
    seq = [start]

    def extend(end: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(adj[end] & sbit)
        avail = unvisited | sbit | 1 << end
        forced = 0
        for u in bits(unvisited):
            d = (adj[u] & avail).bit_count()
            if d < 2:
                return False
            if d == 2 and end != start and adj[u] >> end & 1:
                forced |= 1 << u
        if forced.bit_count() > 1:
            return False
        cand = forced or adj[end] & unvisited
        if not is_connected(G, unvisited | sbit):
            return False
        for u in bits(cand):
            seq.append(u)
            if extend(u, unvisited & ~(1 << u)):
                return True
            seq.pop()
        return False

    if extend(start, full & ~sbit):
        return CycleCert(tuple(seq))
    return None


def _reach(G: Graph, v: int, allowed: int) -> int:
    seen = frontier = G.adj[v] & allowed
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def longest_cycle(G: Graph) -> CycleCert | None:
    """A maximum-length cycle of length at least 3, or ``None`` for forests.

    Cycles are searched with their smallest vertex as the start, in
    ascending order; the first longest cycle found is returned.
    """
    n = G.n
    if n >= 3:
        ham = hamiltonian_cycle(G)
        if ham is not None:
            return ham
    adj = G.adj
    best: list[int] = []
    path: list[int] = []

    def dfs(end: int, allowed: int, start: int) -> bool:
        nonlocal best
        if len(path) >= 3 and adj[end] >> start & 1 and len(path) > len(best):
            best = path.copy()
            if len(best) == n:
                return True
        if len(path) + _reach(G, end, allowed).bit_count() <= len(best):
            return False
        for u in bits(adj[end] & allowed):
            path.append(u)
            if dfs(u, allowed & ~(1 << u), start):
                return True
            path.pop()
        return False

    for s in range(n):
        if n - s <= len(best):
            break
        above = G.vertices & ~((1 << (s + 1)) - 1)
        path[:] = [s]
        if dfs(s, above, s):
            break
    return CycleCert(tuple(best)) if best else None


def is_dominating(G: Graph, C: CycleCert) -> bool:
    """Whether ``G - V(C)`` has no edges."""
    C.validate(G)
    rest = G.vertices & ~C.mask
    return all(not G.adj[v] & rest for v in bits(rest))
