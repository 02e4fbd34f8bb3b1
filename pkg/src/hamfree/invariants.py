"""Exact structural invariants: independence number, connectivity, toughness.

Toughness values are :class:`fractions.Fraction`; complete graphs get
:data:`INF` (``math.inf``), which compares above every fraction. No floating
point enters any computation.

The toughness search enumerates vertex subsets by increasing size, so it is
exponential; graphs up to about 20 vertices finish in seconds and 24 is the
practical ceiling.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .graph import Graph, bits, count_components, is_clique, is_connected, mask_of

__all__ = [
    "INF",
    "Rational",
    "ToughnessResult",
    "format_rational",
    "parse_rational",
    "independence_number",
    "vertex_connectivity",
    "toughness",
    "is_t_tough",
    "is_complete",
]

INF = math.inf

Rational = Union[Fraction, float]


def format_rational(x: Rational) -> str:
    """Render as ``num/den`` (``n`` for integers) or ``inf``."""
    if x == INF:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    if text.strip().lower() == "inf":
        return INF
    value = Fraction(text)
    if value < 0:
        raise ValueError("toughness values are non-negative")
    return value


def is_complete(G: Graph) -> bool:
    return is_clique(G, G.vertices)


@dataclass(frozen=True)
class ToughnessResult:
    value: Rational
    witness: int | None  # vertex mask S attaining the minimum; None for complete graphs

    def __str__(self) -> str:
        return format_rational(self.value)


def independence_number(G: Graph, within: int | None = None) -> tuple[int, int]:
    """Maximum independent set of ``G[within]`` by branch and bound.

    Returns ``(size, mask)``.
    """
    adj = G.adj
    best_size = 0
    best_mask = 0

    def rec(P: int, cur: int, size: int) -> None:
        nonlocal best_size, best_mask
        # vertices of degree <= 1 inside P are always safe to take
        changed = True
        while changed and P:
            changed = False
            for v in bits(P):
                if (adj[v] & P).bit_count() <= 1:
                    cur |= 1 << v
                    size += 1
                    P &= ~(adj[v] | 1 << v)
                    changed = True
                    break
        if not P:
            if size > best_size:
                best_size, best_mask = size, cur
            return
        if size + P.bit_count() <= best_size:
            return
        v = max(bits(P), key=lambda u: (adj[u] & P).bit_count())
        rec(P & ~(adj[v] | 1 << v), cur | 1 << v, size + 1)
        if size + P.bit_count() - 1 > best_size:
            rec(P & ~(1 << v), cur, size)

    rec(G.vertices if within is None else within, 0, 0)
    return best_size, best_mask


def _local_connectivity(G: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    # node split: v_in = 2v, v_out = 2v + 1
    n = G.n
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    big = n
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in bits(G.adj[v]):
            arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(G: Graph) -> int:
    """Size of a minimum vertex cut; ``n - 1`` for complete graphs, 0 if disconnected."""
    if G.n == 0:
        return 0
    if is_complete(G):
        return G.n - 1
    if not is_connected(G):
        return 0
    best = G.n - 1
    for s in range(G.n):
        for t in bits(G.vertices & ~G.adj[s] & ~((1 << (s + 1)) - 1)):
            best = min(best, _local_connectivity(G, s, t))
            if best == 0:
                return 0
    return best


def toughness(G: Graph) -> ToughnessResult:
    """Exact toughness with a witness set ``S`` minimising ``|S| / s(G - S)``."""
    if is_complete(G):
        return ToughnessResult(INF, None)
    if not is_connected(G):
        return ToughnessResult(Fraction(0), 0)
    n = G.n
    alpha, _ = independence_number(G)
    full = G.vertices
    best: Fraction | None = None
    witness = 0
    for k in range(1, n - 1):
        most = min(n - k, alpha)
        if best is not None and Fraction(k, most) >= best:
            break
        for combo in combinations(range(n), k):
            S = mask_of(combo)
            c = count_components(G, full & ~S)
            if c >= 2 and (best is None or Fraction(k, c) < best):
                best, witness = Fraction(k, c), S
                if c == most:
                    break
    assert best is not None  # connected non-complete graphs have a vertex cut
    return ToughnessResult(best, witness)


def is_t_tough(G: Graph, t: Rational, strict: bool = False) -> bool:
    """Whether ``toughness(G) >= t`` (``> t`` with ``strict``), stopping at the first violating set."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if is_complete(G):
        return True
    if t == INF:
        return False
    t = Fraction(t)
    if not is_connected(G):
        return t < 0 or (t == 0 and not strict)
    n = G.n
    alpha, _ = independence_number(G)
    full = G.vertices
    for k in range(1, n - 1):
        most = min(n - k, alpha)
        # a set of size k violates iff k < t*c (k <= t*c when strict), with c <= most
        if k > t * most or (k == t * most and not strict):
            break
        for combo in combinations(range(n), k):
            c = count_components(G, full & ~mask_of(combo))
            if c >= 2 and (k < t * c or (strict and k == t * c)):
                return False
    return True
