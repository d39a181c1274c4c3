"""Canonical forms for small multigraphs.

The key is the lexicographically smallest upper-triangular multiplicity
matrix over all labelings reachable by individualisation/refinement.
Connected components are canonised separately and concatenated in key
order, which keeps disjoint unions of small pieces cheap.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import SizeCapError
from .graph import Multigraph, components

MAX_ORDER = 10


def refine(a: list[list[int]], colors: list[int]) -> list[int]:
    """Colour refinement to an equitable ordered partition.

    ``colors`` are non-negative ranks; the result ranks vertices by
    (old colour, multiset of (neighbour colour, multiplicity)), repeated
    until the number of cells stops growing.  Cell order is invariant
    under relabeling.
    """
    n = len(colors)
    cells = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = a[v]
            nb = sorted((colors[u], row[u]) for u in range(n) if u != v and row[u])
            sigs.append((colors[v], tuple(nb)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        if len(order) == cells:
            return colors
        cells = len(order)


def _initial_colors(a):
    n = len(a)
    keys = [(a[v][v], sum(a[v]) - a[v][v]) for v in range(n)]
    order = sorted(set(keys))
    rank = {s: i for i, s in enumerate(order)}
    return [rank[s] for s in keys]


def _code(a, perm_order):
    # perm_order[i] = original vertex placed at position i
    n = len(perm_order)
    out = [n]
    for i in range(n):
        row = a[perm_order[i]]
        for j in range(i, n):
            out.append(row[perm_order[j]])
    if max(out) > 255:
        raise SizeCapError("edge multiplicity above 255 is not supported by canonical keys")
    return bytes(out)


def _homogeneous(a, colors):
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    groups = list(cells.values())
    for i, ci in enumerate(groups):
        for cj in groups[i:]:
            val = None
            for u in ci:
                row = a[u]
                for w in cj:
                    if u == w:
                        continue
                    if val is None:
                        val = row[w]
                    elif row[w] != val:
                        return False
    return True


def _canon_connected(a):
    """Return (code, order) for a connected multiplicity matrix."""
    n = len(a)
    best = [None, None]

    def leaf(colors):
        order = sorted(range(n), key=lambda v: colors[v])
        code = _code(a, order)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order

    def search(colors):
        colors = refine(a, colors)
        ncells = max(colors) + 1
        if ncells == n or _homogeneous(a, colors):
            leaf(colors)
            return
        sizes = [0] * ncells
        for c in colors:
            sizes[c] += 1
        target = min(
            (c for c in range(ncells) if sizes[c] > 1), key=lambda c: (sizes[c], c)
        )
        for v in range(n):
            if colors[v] == target:
                nxt = [2 * c + 1 for c in colors]
                nxt[v] = 2 * target
                search(nxt)

    search(_initial_colors(a))
    return best[0], best[1]


def canonical_labeling(G: Multigraph) -> tuple[bytes, list[int]]:
    """Return ``(key, order)``; ``order[i]`` is the vertex placed at position ``i``."""
    if G.n > MAX_ORDER:
        raise SizeCapError(f"canonical forms are limited to n <= {MAX_ORDER} (got {G.n})")
    return _canonical_labeling(G)


@lru_cache(maxsize=200_000)
def _canonical_labeling(G: Multigraph):
    a = G.adjacency_matrix()
    k, label = components(G)
    parts = []
    if k <= 1:
        if G.n:
            parts.append(_canon_connected(a))
    else:
        groups: list[list[int]] = [[] for _ in range(k)]
        for v, c in enumerate(label):
            groups[c].append(v)
        for vs in groups:
            sub = [[a[u][w] for w in vs] for u in vs]
            code, order = _canon_connected(sub)
            parts.append((code, [vs[i] for i in order]))
    parts.sort(key=lambda p: (len(p[1]), p[0]))
    order = [v for _, o in parts for v in o]
    return _code(a, order), order


def canonical(G: Multigraph) -> bytes:
    """Isomorphism-class key: equal keys iff the graphs are isomorphic."""
    return canonical_labeling(G)[0]


def canonical_graph(G: Multigraph) -> Multigraph:
    """The representative of G's class whose matrix is the canonical key."""
    _, order = canonical_labeling(G)
    perm = [0] * G.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return G.relabel(perm)


def automorphism_count(G: Multigraph) -> int:
    """|Aut(G)| by backtracking over colour-preserving vertex maps."""
    n = G.n
    if n == 0:
        return 1
    a = G.adjacency_matrix()
    colors = refine(a, _initial_colors(a))
    image = [-1] * n
    used = [False] * n
    count = 0

    def extend(v):
        nonlocal count
        if v == n:
            count += 1
            return
        for w in range(n):
            if used[w] or colors[w] != colors[v] or a[v][v] != a[w][w]:
                continue
            ok = True
            for u in range(v):
                if a[v][u] != a[w][image[u]]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return count


def labeled_class_size(G: Multigraph) -> int:
    """Number of labeled graphs on ``0..n-1`` isomorphic to G (n!/|Aut|)."""
    return factorial(G.n) // automorphism_count(G)
