"""Canonical forms, isomorph-free generation, and graph6 streams.

Canonical labelling uses colour refinement followed by an individualisation
search tree. Automorphisms found at equivalent leaves prune the tree: orbit
pruning at each node, plus a jump back to the common ancestor whenever a
leaf repeats the first or best leaf's code.

Generation is canonical augmentation by one vertex: a child ``G + v`` is kept
only when ``v`` lies in the automorphism orbit of the child's canonical
deletion vertex, and siblings from the same parent are deduplicated by
canonical code. Nothing but the current parent's siblings is held in memory.
"""

from __future__ import annotations

import logging
from itertools import islice
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .graph import Graph, bits, is_connected
from .graph6 import Graph6Error, from_graph6, to_graph6

__all__ = [
    "CANONICAL_MAX_N",
    "ENUMERATION_MAX_N",
    "KNOWN_COUNTS",
    "StreamParseError",
    "canonical_labeling",
    "canonical_form",
    "canonical_graph",
    "enumerate_graphs",
    "enumerate_up_to",
    "read_graph6_stream",
    "write_graph6",
    "shard",
]

log = logging.getLogger(__name__)

CANONICAL_MAX_N = 16
ENUMERATION_MAX_N = 10

# unlabelled graphs on n vertices, n = 1..10
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}

Code = tuple


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by each vertex's neighbour counts into every current cell;
    sub-cells are ordered by that count vector, so the result only depends
    on the labelled structure up to isomorphism.
    """
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _initial_cells(n: int, colors: Sequence[Hashable] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))]
    groups: dict = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    return [groups[c] for c in sorted(groups)]


def _leaf(adj: Sequence[int], cells: list[list[int]]) -> tuple[Code, list[int]]:
    perm = [c[0] for c in cells]
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    code = tuple(sum(1 << inv[u] for u in bits(adj[v])) for v in perm)
    return code, perm


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labeling(G: Graph, colors: Sequence[Hashable] | None = None) -> tuple[Code, list[int]]:
    """Canonical code and labelling of a (vertex-coloured) graph.

    Returns
    -------
    code : tuple of int
        Adjacency rows of the canonically relabelled graph; equal for two
        graphs exactly when they are isomorphic (respecting colours).
    perm : list of int
        ``perm[i]`` is the vertex placed at canonical position ``i``.
    """
    n = G.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical labelling supports at most {CANONICAL_MAX_N} vertices, got {n}")
    if n == 0:
        return (), []
    adj = G.adj
    state: dict = {"first": None, "best": None}
    autos: list[list[int]] = []

    def on_leaf(cells: list[list[int]], path: list[int]) -> int | None:
        code, perm = _leaf(adj, cells)
        if state["first"] is None:
            state["first"] = state["best"] = (code, perm, list(path))
            return None
        for key in ("first", "best"):
            ref_code, ref_perm, ref_path = state[key]
            if code == ref_code:
                gamma = [0] * n
                for a, b in zip(ref_perm, perm):
                    gamma[a] = b
                autos.append(gamma)
                return _common_prefix(path, ref_path)
        if code > state["best"][0]:
            state["best"] = (code, perm, list(path))
        return None

    def search(cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            return on_leaf(cells, path)
        ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[ti]
        depth = len(path)
        explored: list[int] = []
        for v in target:
            if explored and _same_orbit(v, explored, path):
                continue
            child = cells[:ti] + [[v], [u for u in target if u != v]] + cells[ti + 1:]
            path.append(v)
            r = search(child, path)
            path.pop()
            explored.append(v)
            if r is not None and r < depth:
                return r
        return None

    def _same_orbit(v: int, explored: list[int], path: list[int]) -> bool:
        gens = [g for g in autos if all(g[p] == p for p in path)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(e in orbit for e in explored)

    search(_initial_cells(n, colors), [])
    code, perm, _ = state["best"]
    return code, perm


def canonical_graph(G: Graph) -> Graph:
    code, _ = canonical_labeling(G)
    return Graph(G.n, code)


def canonical_form(G: Graph) -> str:
    """Isomorphism-invariant code: the graph6 string of the canonical relabelling."""
    return to_graph6(canonical_graph(G))


def _vertex_invariant(G: Graph, v: int) -> tuple:
    degs = G.degrees()
    return (degs[v], tuple(sorted(degs[u] for u in bits(G.adj[v]))))


def _accept_and_code(H: Graph, v: int) -> Code | None:
    """Canonical code of ``H`` if ``v`` is in the orbit of H's canonical deletion vertex."""
    inv = [_vertex_invariant(H, u) for u in range(H.n)]
    top = max(inv)
    if inv[v] != top:
        return None
    code, perm = canonical_labeling(H, inv)
    cands = [u for u in range(H.n) if inv[u] == top]
    if len(cands) == 1:
        return code
    w = max(cands, key=perm.index)
    if w == v:
        return code
    base = [(c, 0) for c in inv]
    cv = list(base)
    cv[v] = (inv[v], 1)
    cw = list(base)
    cw[w] = (inv[w], 1)
    if canonical_labeling(H, cv)[0] != canonical_labeling(H, cw)[0]:
        return None
    return code


def _children(G: Graph) -> Iterator[Graph]:
    k = G.n
    seen: set[Code] = set()
    for S in range(1 << k):
        adj = tuple(a | (S >> u & 1) << k for u, a in enumerate(G.adj)) + (S,)
        H = Graph(k + 1, adj)
        code = _accept_and_code(H, k)
        if code is None or code in seen:
            continue
        seen.add(code)
        yield Graph(k + 1, code)


def _generate(G: Graph, n: int) -> Iterator[Graph]:
    if G.n == n:
        yield G
        return
    for child in _children(G):
        yield from _generate(child, n)


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    filter: Callable[[Graph], bool] | None = None,
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on ``n`` vertices, in a fixed order.

    Practical in pure Python up to ``n = 8`` (a minute or so); larger
    universes should come from an external graph6 file.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}")
    for G in _generate(Graph(1, (0,)), n):
        if connected_only and not is_connected(G):
            continue
        if filter is not None and not filter(G):
            continue
        yield G


def enumerate_up_to(n_max: int, connected_only: bool = False, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, connected_only)


class StreamParseError(Graph6Error):
    def __init__(self, lineno: int, cause: Exception):
        super().__init__(f"line {lineno}: {cause}")
        self.lineno = lineno
        self.cause = cause


def read_graph6_stream(
    source: Iterable[str],
    on_error: str = "abort",
    errors: list | None = None,
) -> Iterator[Graph]:
    """Parse graph6 lines in order; blank lines are ignored.

    ``on_error="abort"`` raises :class:`StreamParseError` naming the line;
    ``"skip"`` logs it, records ``(lineno, message)`` in ``errors`` if given,
    and moves on.
    """
    if on_error not in ("abort", "skip"):
        raise ValueError("on_error must be 'abort' or 'skip'")
    for lineno, line in enumerate(source, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield from_graph6(line)
        except Graph6Error as exc:
            if on_error == "abort":
                raise StreamParseError(lineno, exc) from exc
            log.warning("skipping graph6 line %d: %s", lineno, exc)
            if errors is not None:
                errors.append((lineno, str(exc)))


def write_graph6(graphs: Iterable[Graph], path) -> int:
    count = 0
    with open(path, "w") as fh:
        for G in graphs:
            fh.write(to_graph6(G) + "\n")
            count += 1
    return count


def shard(stream: Iterable[Graph], index: int, count: int) -> Iterator[Graph]:
    """Round-robin slice ``index`` of ``count`` of a stream."""
    if not 0 <= index < count:
        raise ValueError("shard index out of range")
    return islice(stream, index, None, count)
