"""Forbidden-pattern catalog and an induced-subgraph matcher.

"Free" always means no *induced* copy. Pattern tokens accepted by
:func:`pattern` (and the CLI):

==========  ==========================  ===========================
token       graph                        aliases
==========  ==========================  ===========================
K1+P2       K1 u P2
K1+P3       K1 u P3
K1+P4       K1 u P4
K1+P5       K1 u P5
K1+P6       K1 u P6
K2+P3       K2 u P3
2K2         K2 u K2                      K2+K2
K2+K3       K2 u K3
K1+K1,3     K1 u K_{1,3}                 K1+claw
P3          path on 3 vertices
P4          path on 4 vertices
K1,3        claw                         claw
K1,3+e      claw plus one edge (paw)     claw+e, paw
2K1         K1 u K1                      K1+K1
3K1         K1 u K1 u K1                 K1+K1+K1
==========  ==========================  ===========================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .graph import (
    Graph,
    bits,
    claw_plus_e,
    complete,
    disjoint_union,
    empty,
    path,
    star,
)

__all__ = [
    "Pattern",
    "CATALOG",
    "pattern",
    "contains_induced",
    "is_free",
    "is_induced_embedding",
]


@dataclass(frozen=True)
class Pattern:
    id: str
    graph: Graph


def _k1_plus(H: Graph) -> Graph:
    return disjoint_union(complete(1), H)


CATALOG: dict[str, Pattern] = {
    p.id: p
    for p in [
        Pattern("K1+P2", _k1_plus(path(2))),
        Pattern("K1+P3", _k1_plus(path(3))),
        Pattern("K1+P4", _k1_plus(path(4))),
        Pattern("K1+P5", _k1_plus(path(5))),
        Pattern("K1+P6", _k1_plus(path(6))),
        Pattern("K2+P3", disjoint_union(complete(2), path(3))),
        Pattern("2K2", disjoint_union(complete(2), complete(2))),
        Pattern("K2+K3", disjoint_union(complete(2), complete(3))),
        Pattern("K1+K1,3", _k1_plus(star(3))),
        Pattern("P3", path(3)),
        Pattern("P4", path(4)),
        Pattern("K1,3", star(3)),
        Pattern("K1,3+e", claw_plus_e()),
        Pattern("2K1", empty(2)),
        Pattern("3K1", empty(3)),
    ]
}

_ALIASES = {
    "K2+K2": "2K2",
    "K1+claw": "K1+K1,3",
    "claw": "K1,3",
    "claw+e": "K1,3+e",
    "paw": "K1,3+e",
    "K1+K1": "2K1",
    "K1+K1+K1": "3K1",
}

PatternLike = Union[Pattern, str]


def pattern(token: PatternLike) -> Pattern:
    """Look up a catalog pattern by token or alias."""
    if isinstance(token, Pattern):
        return token
    key = _ALIASES.get(token, token)
    try:
        return CATALOG[key]
    except KeyError:
        raise ValueError(f"unknown pattern {token!r}; known: {', '.join(CATALOG)}") from None


def _match_order(H: Graph) -> list[int]:
    # descending degree, preferring vertices tied to already placed ones
    order: list[int] = []
    placed = 0
    remaining = set(range(H.n))
    while remaining:
        v = max(remaining, key=lambda u: ((H.adj[u] & placed).bit_count(), H.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def contains_induced(G: Graph, H: PatternLike | Graph) -> tuple[int, ...] | None:
    """Find an induced copy of ``H`` in ``G``.

    Returns
    -------
    tuple of int or None
        ``emb[p]`` is the host vertex for pattern vertex ``p``; ``None`` when
        ``G`` is H-free.
    """
    if not isinstance(H, Graph):
        H = pattern(H).graph
    k = H.n
    if k > G.n:
        return None
    order = _match_order(H)
    # constraints[i]: (index of earlier position, adjacent?) pairs
    constraints = [
        [(j, H.has_edge(order[i], order[j])) for j in range(i)] for i in range(k)
    ]
    host_deg = G.degrees()
    need = [H.degree(order[i]) for i in range(k)]
    deg_ok = [0] * (max(need, default=0) + 1)
    for d in range(len(deg_ok)):
        deg_ok[d] = sum(1 << v for v in range(G.n) if host_deg[v] >= d)
    adj = G.adj
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = deg_ok[need[i]] & ~used
        for j, joined in constraints[i]:
            h = image[j]
            cand &= adj[h] if joined else ~adj[h]
            if not cand:
                return False
        for h in bits(cand):
            image[i] = h
            if extend(i + 1, used | 1 << h):
                return True
        return False

    if not extend(0, 0):
        return None
    emb = [0] * k
    for i, p in enumerate(order):
        emb[p] = image[i]
    return tuple(emb)


def is_induced_embedding(G: Graph, H: Graph, emb: tuple[int, ...]) -> bool:
    """Check injectivity and preservation of adjacency and non-adjacency."""
    if len(emb) != H.n or len(set(emb)) != H.n:
        return False
    if any(not 0 <= h < G.n for h in emb):
        return False
    return all(
        H.has_edge(p, q) == G.has_edge(emb[p], emb[q])
        for p in range(H.n)
        for q in range(p + 1, H.n)
    )


def is_free(G: Graph, patterns: Iterable[PatternLike] | PatternLike) -> bool:
    if isinstance(patterns, (str, Pattern)):
        patterns = [patterns]
    return all(contains_induced(G, p) is None for p in patterns)
