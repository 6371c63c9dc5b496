"""graph6 encoding and decoding (undirected simple graphs).

Follows the format description distributed with nauty: a size prefix
N(n), then the upper triangle of the adjacency matrix read column by
column, packed six bits per byte with 63 added.
"""

from __future__ import annotations

from .graphs import ParseError, SimpleGraph

HEADER = ">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def encode_graph6(G: SimpleGraph) -> str:
    """Encode G; vertices 1..n map to graph6 vertices 0..n-1."""
    n = G.n
    bits = []
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if (i, j) in G.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return (_encode_size(n) + body).decode("ascii")


def parse_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = s.encode("ascii", errors="replace")
    for offset, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside 63..126", offset=offset)
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated size field", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated size field", offset=len(data))
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise ParseError(
            f"expected {expected} data bytes for n={n}, found {len(body)}",
            offset=pos + min(len(body), expected),
        )
    pad = expected * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits in final byte", offset=pos + expected - 1)

    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return SimpleGraph.from_edges(n, edges)
