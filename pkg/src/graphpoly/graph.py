"""Undirected multigraphs with loops, and the three edge operations.

Vertices are ``0..n-1``.  Edges are stored as a sorted tuple of pairs
``(u, v)`` with ``u <= v``; a loop is ``(u, u)``.  Edge indices used by
:func:`delete_edge` and friends refer to positions in that sorted tuple.
Graphs are immutable and hashable.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, LoopEdgeError


class Multigraph:
    __slots__ = ("n", "edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InputError(f"negative order {n}")
        norm = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {tuple(e)} has an endpoint outside 0..{n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        self._hash = None

    # basic parameters

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def k(self) -> int:
        return components(self)[0]

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Multigraph({self.n}, {list(self.edges)})"

    def is_loop(self, i: int) -> bool:
        u, v = self.edges[i]
        return u == v

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and len(set(self.edges)) == len(self.edges)

    def loops(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def degrees(self) -> list[int]:
        """Degrees with a loop counted twice."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def adjacency_masks(self) -> list[int]:
        """Neighbour bitmasks ignoring multiplicity; a loop sets the vertex's own bit."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def adjacency_matrix(self) -> list[list[int]]:
        """Multiplicity matrix; the diagonal holds the number of loops."""
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] += 1
            if u != v:
                a[v][u] += 1
        return a

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Multigraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced(self, vertices: Iterable[int]) -> "Multigraph":
        """Induced subgraph on ``vertices``, relabelled in increasing order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Multigraph(
            len(vs), [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        )

    def union(self, other: "Multigraph") -> "Multigraph":
        """Disjoint union; ``other``'s vertices are shifted by ``self.n``."""
        s = self.n
        return Multigraph(
            self.n + other.n, list(self.edges) + [(u + s, v + s) for u, v in other.edges]
        )

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Multigraph":
        return Multigraph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def complement(self) -> "Multigraph":
        if not self.is_simple():
            raise InputError("complement is only defined for simple graphs")
        present = set(self.edges)
        return Multigraph(
            self.n, [e for e in combinations(range(self.n), 2) if e not in present]
        )


def _check_index(G: Multigraph, i: int) -> None:
    if not 0 <= i < G.m:
        raise InputError(f"edge index {i} out of range for a graph with {G.m} edges")


def delete_edge(G: Multigraph, i: int) -> Multigraph:
    _check_index(G, i)
    return Multigraph(G.n, G.edges[:i] + G.edges[i + 1:])


def contract_edge(G: Multigraph, i: int) -> Multigraph:
    """Merge the endpoints of edge ``i``.

    The contracted edge disappears; every other edge is re-attached to the
    merged vertex, so parallel copies of ``i`` become loops.
    """
    _check_index(G, i)
    a, b = G.edges[i]
    if a == b:
        raise LoopEdgeError(f"cannot contract loop {G.edges[i]}")

    def image(v):
        if v == b:
            v = a
        return v - 1 if v > b else v

    rest = G.edges[:i] + G.edges[i + 1:]
    return Multigraph(G.n - 1, [(image(u), image(v)) for u, v in rest])


def extract_edge(G: Multigraph, i: int) -> Multigraph:
    """Remove both endpoints of edge ``i`` together with every incident edge."""
    _check_index(G, i)
    a, b = G.edges[i]
    if a == b:
        raise LoopEdgeError(f"cannot extract loop {G.edges[i]}")
    return G.induced(v for v in range(G.n) if v != a and v != b)


def delete_vertex(G: Multigraph, v: int) -> Multigraph:
    return G.induced(u for u in range(G.n) if u != v)


def components(G: Multigraph) -> tuple[int, list[int]]:
    """Return ``(k, label)`` where ``label[v]`` is a component id in ``0..k-1``.

    Component ids are assigned in order of each component's smallest vertex.
    """
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    ids: dict[int, int] = {}
    label = []
    for v in range(G.n):
        r = find(v)
        if r not in ids:
            ids[r] = len(ids)
        label.append(ids[r])
    return len(ids), label


def split_components(G: Multigraph) -> list[Multigraph]:
    """The connected components of ``G`` as separate graphs."""
    k, label = components(G)
    if k <= 1:
        return [G] if G.n else []
    groups: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(label):
        groups[c].append(v)
    return [G.induced(g) for g in groups]


def is_bridge(G: Multigraph, i: int) -> bool:
    u, v = G.edges[i]
    if u == v:
        return False
    if G.edges.count((u, v)) > 1:
        return False
    return components(delete_edge(G, i))[0] > components(G)[0]


def is_bipartite(G: Multigraph) -> bool:
    color = [-1] * G.n
    adj: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in G.edges:
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


# constructors


def empty_graph(n: int) -> Multigraph:
    return Multigraph(n)


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, combinations(range(n), 2))


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise InputError("a simple cycle needs at least 3 vertices")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Multigraph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    out = Multigraph(0)
    for g in graphs:
        out = out.union(g)
    return out


# edge-list text format: "n m" then m lines "u v"


def parse_edge_list(text: str) -> Multigraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise InputError("empty edge list")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise InputError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise InputError(f"header declares {m} edges but {len(edges)} were given")
    return Multigraph(n, edges)


def format_edge_list(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"
