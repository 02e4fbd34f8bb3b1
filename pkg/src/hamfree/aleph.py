"""Recognition of the layered class ℵ and the (K1 u P2)-free dichotomy.

A graph is in ℵ when it is edgeless, complete, or splits as ``V1 u V2``
with ``V1`` a nonempty independent set, every vertex of ``V1`` adjacent to
exactly ``V2``, and ``G[V2]`` in ℵ again. Peeling the ``V1`` layers off one
after another gives a certificate: the list of layers plus the terminal
edgeless or complete residue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cycles import CycleCert, longest_cycle
from .graph import Graph, bits, is_clique, is_connected, is_independent
from .graph6 import to_graph6
from .invariants import independence_number
from .oracles import check_aleph_cert
from .patterns import contains_induced

__all__ = [
    "AlephCert",
    "DichotomyResult",
    "ProofTraceViolation",
    "PreconditionError",
    "in_aleph",
    "theorem1_dichotomy",
]

INDEPENDENT = "independent"
COMPLETE = "complete"


@dataclass(frozen=True)
class AlephCert:
    layers: tuple[int, ...]
    terminal: str  # "independent" or "complete"
    terminal_set: int

    def to_json(self) -> dict:
        return {
            "layers": [list(bits(m)) for m in self.layers],
            "terminal": self.terminal,
            "terminal_set": list(bits(self.terminal_set)),
        }


class PreconditionError(ValueError):
    """The input graph does not satisfy the procedure's hypothesis."""


class ProofTraceViolation(RuntimeError):
    """A step of the longest-cycle construction did not go as argued.

    ``config`` holds the offending configuration (graph6, cycle, vertices).
    """

    def __init__(self, message: str, config: dict):
        super().__init__(message)
        self.config = config


@dataclass(frozen=True)
class DichotomyResult:
    cycle: CycleCert | None = None
    aleph: AlephCert | None = None
    indep: int | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def hamiltonian(self) -> bool:
        return self.cycle is not None


def in_aleph(G: Graph) -> AlephCert | None:
    """Return a layer certificate if ``G`` is in ℵ, else ``None``.

    Any valid first layer ``V1`` equals ``V \\ N(v)`` for each of its
    members ``v``, so the candidates are the distinct non-neighbourhoods.
    Every candidate is tried, largest first; the split need not be unique.
    """
    if G.n == 0:
        return None
    adj = G.adj

    @lru_cache(maxsize=None)
    def rec(R: int) -> tuple | None:
        if is_independent(G, R):
            return ((), INDEPENDENT, R)
        if is_clique(G, R):
            return ((), COMPLETE, R)
        # largest layers first, so the first layer is the big independent side
        cands = sorted({R & ~adj[v] for v in bits(R)}, key=lambda m: (-m.bit_count(), m))
        for V1 in cands:
            if V1 == R:
                continue
            V2 = R & ~V1
            if not is_independent(G, V1):
                continue
            if any(adj[u] & R != V2 for u in bits(V1)):
                continue
            sub = rec(V2)
            if sub is not None:
                return ((V1,) + sub[0], sub[1], sub[2])
        return None

    found = rec(G.vertices)
    return None if found is None else AlephCert(*found)


def _violation(G: Graph, message: str, **config) -> ProofTraceViolation:
    return ProofTraceViolation(message, {"graph6": to_graph6(G), **config})


def theorem1_dichotomy(G: Graph) -> DichotomyResult:
    """Split a (K1 u P2)-free graph into the hamiltonian or the ℵ outcome.

    Follows the longest-cycle construction: star and edgeless cases first,
    then a longest cycle ``C``; an off-cycle vertex ``x`` must see every
    other cycle vertex, which yields ``V1 = (G - C) u {v2, v4, ...}`` and
    ``V2 = {v1, v3, ...}``; ``G[V2]`` is peeled with maximum independent
    sets until the residue is edgeless or complete. Every claimed step is
    checked, and a failed check raises :class:`ProofTraceViolation`.

    Raises
    ------
    PreconditionError
        If ``G`` contains an induced K1 u P2.
    ProofTraceViolation
        If the construction meets a configuration the argument rules out.
    """
    if G.n == 0:
        raise PreconditionError("empty vertex set")
    emb = contains_induced(G, "K1+P2")
    if emb is not None:
        raise PreconditionError(f"graph contains induced K1+P2 at {emb}")
    n = G.n
    adj = G.adj
    full = G.vertices
    if n == 1:
        return DichotomyResult(cycle=CycleCert((0,)))
    if G.m == 0:
        return DichotomyResult(aleph=AlephCert((), INDEPENDENT, full), indep=full, notes=("edgeless",))
    if n == 2:
        return DichotomyResult(cycle=CycleCert((0, 1)))
    if not is_connected(G):
        raise _violation(G, "disconnected graph with an edge is K1+P2-free")
    if G.m == n - 1:
        centres = [v for v in range(n) if adj[v] == full & ~(1 << v)]
        if not centres:
            raise _violation(G, "tree that is not a star")
        c = centres[0]
        leaves = full & ~(1 << c)
        return DichotomyResult(
            aleph=AlephCert((leaves,), INDEPENDENT, 1 << c), indep=leaves, notes=("star",)
        )

    C = longest_cycle(G)
    if C is None:
        raise _violation(G, "connected non-tree without a cycle")
    if len(C) == n:
        return DichotomyResult(cycle=C)

    off = full & ~C.mask
    x = next(v for v in bits(off) if adj[v] & C.mask)
    y = next(v for v in C.seq if adj[x] >> v & 1)
    C = C.rotated(y)
    seq = C.seq
    t = len(seq)
    config = {"cycle": list(seq), "x": x}
    for i, v in enumerate(seq):
        if bool(adj[x] >> v & 1) != (i % 2 == 0):
            raise _violation(G, f"chord pattern broken at v{i + 1}", **config)
    if t % 2:
        raise _violation(G, "longest cycle has odd length", **config)
    V2 = sum(1 << v for v in seq[0::2])
    evens = sum(1 << v for v in seq[1::2])
    if not is_independent(G, off):
        raise _violation(G, "vertices off the cycle are not independent", **config)
    for v in bits(off):
        if adj[v] != V2:
            raise _violation(G, f"off-cycle vertex {v} does not see exactly the odd cycle vertices", **config)
    V1 = off | evens
    if not is_independent(G, V1):
        raise _violation(G, "V1 is not independent", **config)
    for v in bits(V1):
        if adj[v] != V2:
            raise _violation(G, f"vertex {v} of V1 does not see exactly V2", **config)

    layers = [V1]
    R = V2
    while True:
        if is_independent(G, R):
            tag = INDEPENDENT
            break
        if is_clique(G, R):
            tag = COMPLETE
            break
        _, V3 = independence_number(G, R)
        V4 = R & ~V3
        for w in bits(V3):
            if adj[w] & R != V4:
                raise _violation(G, f"vertex {w} of a maximum independent layer misses part of the rest", **config)
        layers.append(V3)
        R = V4
    cert = AlephCert(tuple(layers), tag, R)

    problem = check_aleph_cert(G, cert)
    if problem:
        raise _violation(G, f"constructed certificate invalid: {problem}", **config)
    if 2 * V1.bit_count() <= n:
        raise _violation(G, "independent layer is not larger than half the graph", **config)
    return DichotomyResult(aleph=cert, indep=V1, notes=("longest-cycle",))
