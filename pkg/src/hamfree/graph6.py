"""graph6 encoding for graphs with at most 64 vertices.

Layout: a size prefix ``N(n)`` followed by the upper triangle of the
adjacency matrix read column by column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``),
packed six bits per byte, each byte offset by 63. Sizes up to 62 take one
byte; 63 and 64 take ``~`` plus three bytes.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

__all__ = [
    "Graph6Error",
    "HeaderError",
    "TruncatedError",
    "SizeError",
    "from_graph6",
    "to_graph6",
]


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class HeaderError(Graph6Error):
    """The size prefix is missing or malformed."""


class TruncatedError(Graph6Error):
    """The edge section is too short, too long, or contains bad bytes."""


class SizeError(Graph6Error):
    """The encoded vertex count is outside ``1..64``."""


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(G: Graph) -> str:
    if not 1 <= G.n <= MAX_VERTICES:
        raise ValueError(f"graph6 output needs 1..{MAX_VERTICES} vertices, got {G.n}")
    out = [_encode_size(G.n)]
    acc = 0
    nbits = 0
    adj = G.adj
    for j in range(1, G.n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _decode_size(text: str) -> tuple[int, int]:
    if not text:
        raise HeaderError("empty graph6 string")
    c = ord(text[0])
    if 63 <= c <= 125:
        return c - 63, 1
    if c != 126:
        raise HeaderError(f"invalid size byte {text[0]!r}")
    if len(text) >= 2 and text[1] == "~":
        raise SizeError("eight-byte size prefix implies more than 64 vertices")
    if len(text) < 4:
        raise HeaderError("size prefix '~' needs three more bytes")
    n = 0
    for ch in text[1:4]:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise HeaderError(f"invalid size byte {ch!r}")
        n = (n << 6) | v
    if n < 63:
        raise HeaderError(f"non-canonical long size prefix for n={n}")
    return n, 4


def from_graph6(text: str) -> Graph:
    text = text.rstrip("\r\n")
    n, offset = _decode_size(text)
    if not 1 <= n <= MAX_VERTICES:
        raise SizeError(f"graph6 encodes {n} vertices; supported range is 1..{MAX_VERTICES}")
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    body = text[offset:]
    if len(body) < nbytes:
        raise TruncatedError(f"edge section has {len(body)} bytes, expected {nbytes}")
    if len(body) > nbytes:
        raise TruncatedError(f"edge section has {len(body)} bytes, expected {nbytes} (trailing data)")
    values = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise TruncatedError(f"invalid edge byte {ch!r}")
        values.append(v)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = nbytes * 6 - need
    if pad and values[-1] & ((1 << pad) - 1):
        raise TruncatedError("non-zero padding bits")
    return Graph(n, tuple(adj))
