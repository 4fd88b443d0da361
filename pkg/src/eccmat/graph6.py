"""graph6 wire format: one printable ASCII line per graph.

Encoding: byte0 = n + 63 (short form, 1 <= n <= 62 here), followed by the
upper triangle read column by column -- (0,1), (0,2), (1,2), (0,3), ... --
packed into 6-bit groups, most significant bit first, each group offset
by 63.  Padding bits must be zero.
"""
from __future__ import annotations

from .errors import MalformedGraph6, SizeLimitExceeded
from .graphs import Graph

_MAX_SHORT_N = 62


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (short form only).

    Raises MalformedGraph6 on empty input, out-of-range bytes, the
    multi-byte order prefix, wrong record length, or nonzero padding.
    """
    s = line.rstrip("\r\n")
    if not s:
        raise MalformedGraph6("empty record")
    codes = [ord(c) for c in s]
    for pos, b in enumerate(codes):
        if b < 63 or b > 126:
            raise MalformedGraph6(f"byte {b} out of range 63..126 at position {pos}")
    if codes[0] == 126:
        raise MalformedGraph6("multi-byte vertex counts (n > 62) are not supported")
    n = codes[0] - 63
    if n < 1:
        raise MalformedGraph6("graphs need at least one vertex")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(codes) - 1 != need:
        raise MalformedGraph6(f"expected {need} data characters for n={n}, got {len(codes) - 1}")

    rows = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for b in codes[1:]:
        group = b - 63
        for k in range(5, -1, -1):
            bit = group >> k & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                idx += 1
            elif bit:
                raise MalformedGraph6("nonzero padding bits")
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 record (no trailing newline)."""
    if g.n > _MAX_SHORT_N:
        raise SizeLimitExceeded(f"graph6 short form is limited to {_MAX_SHORT_N} vertices")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)
