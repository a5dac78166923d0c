"""graph6 encoding: printable bytes 63..126, six bits per byte.

The header is N(n): one byte n+63 for n <= 62, or '~' followed by three
bytes carrying an 18-bit big-endian n up to 258047.  The body packs the
upper triangle of the adjacency matrix column by column ((0,1), (0,2),
(1,2), (0,3), ...), zero-padded to a multiple of six bits.
"""

from __future__ import annotations

from .graphs import Graph, build_graph

_HEADER = b">>graph6<<"
_MAX_LONG_N = 258047


def _bit_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 string; strict about padding and length."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    data = data.rstrip(b"\n")
    if not data:
        raise ValueError("empty graph6 input")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graphs beyond 258047 vertices are out of scope")
        if len(data) < 4:
            raise ValueError("truncated long-form header")
        chunk = [b - 63 for b in data[1:4]]
        if any(not 0 <= c <= 63 for c in chunk):
            raise ValueError("malformed long-form header byte")
        n = (chunk[0] << 12) | (chunk[1] << 6) | chunk[2]
        body = data[4:]
    else:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise ValueError(f"malformed header byte {data[0]}")
        body = data[1:]
    if n == 0:
        raise ValueError("the empty graph is not representable")
    nbits = _bit_count(n)
    need = (nbits + 5) // 6
    if len(body) < need:
        raise ValueError(f"body holds {len(body)} bytes, needs {need}")
    if len(body) > need:
        raise ValueError("trailing garbage after graph body")
    bits = []
    for b in body:
        val = b - 63
        if not 0 <= val <= 63:
            raise ValueError(f"byte {b} outside the printable graph6 range")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> bytes:
    """Encode a Graph as canonical graph6 bytes (zero padding, minimal header)."""
    n = g.n
    if n > _MAX_LONG_N:
        raise ValueError("graphs beyond 258047 vertices are out of scope")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k:k + 6]:
            val = (val << 1) | bit
        body.append(val + 63)
    return head + bytes(body)
