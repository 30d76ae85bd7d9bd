"""graph6 text encoding, header-free, one graph per line.

Only the short form is handled (order 1..62, single size byte).  The
upper-triangle bits run column-major, x(0,1) x(0,2) x(1,2) x(0,3) ...,
packed big-endian six bits per character with offset 63.
"""

from __future__ import annotations

from .graphs import MAX_ORDER, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def to_graph6(g: Graph) -> str:
    chars = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chars.append(chr(63 + acc))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    if not text:
        raise Graph6Error("empty graph6 string")
    for k, c in enumerate(text):
        if not 63 <= ord(c) <= 126:
            raise Graph6Error(f"byte {ord(c)} at position {k} outside graph6 range")
    n = ord(text[0]) - 63
    if n == 0:
        raise Graph6Error("order 0 not supported")
    if n == 63:
        # chr(126) opens the multi-byte size form, which never fits in one byte anyway
        raise Graph6Error(f"order above {MAX_ORDER} not supported")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    got = len(text) - 1
    if got < need:
        raise Graph6Error(f"truncated: order {n} needs {need} data characters, got {got}")
    if got > need:
        raise Graph6Error(f"trailing garbage: order {n} needs {need} data characters, got {got}")
    rows = [0] * n
    t = 0
    for c in text[1:]:
        group = ord(c) - 63
        for b in range(5, -1, -1):
            bit = (group >> b) & 1
            if t < npairs:
                if bit:
                    # invert the column-major index: t = C(j,2) + i
                    j = 1
                    while (j + 1) * j // 2 <= t:
                        j += 1
                    i = t - j * (j - 1) // 2
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bits")
            t += 1
    return Graph(n, tuple(rows))
