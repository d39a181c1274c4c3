"""graph6 codec for simple graphs with fewer than 63 vertices."""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Multigraph


def encode_graph6(G: Multigraph) -> str:
    if not G.is_simple():
        raise Graph6Error("graph6 encodes simple graphs only")
    if G.n >= 63:
        raise Graph6Error("only the short form (n < 63) is supported")
    present = set(G.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + G.n)]
    for s in range(0, len(bits), 6):
        val = 0
        for b in bits[s:s + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Multigraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} at position {pos} is outside 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing bytes after {need}-byte payload")
    bits = []
    for ch in payload:
        val = ord(ch) - 63
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Multigraph(n, edges)
