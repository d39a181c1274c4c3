"""Exhaustive enumeration of unlabeled graphs and seeded random sampling."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import MAX_ORDER, canonical, canonical_graph, labeled_class_size
from .errors import InputError, SizeCapError
from .graph import Multigraph

MAX_EXHAUSTIVE = 7


@lru_cache(maxsize=None)
def _unlabeled(n: int) -> tuple[Multigraph, ...]:
    if n == 0:
        return (Multigraph(0),)
    seen: dict[bytes, Multigraph] = {}
    for H in _unlabeled(n - 1):
        base = list(H.edges)
        for r in range(n):
            for nbrs in combinations(range(n - 1), r):
                G = Multigraph(n, base + [(u, n - 1) for u in nbrs])
                key = canonical(G)
                if key not in seen:
                    seen[key] = canonical_graph(G)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (sum(k[1:]), k)))


def enumerate_unlabeled(n: int, prop=None) -> Iterator[Multigraph]:
    """Yield one representative per isomorphism class of simple graphs of order n.

    Representatives are in canonical labeling, ordered by edge count and then
    canonical key.  ``prop`` (a parsed property) keeps only graphs satisfying it.
    """
    if n < 0:
        raise InputError("order must be non-negative")
    if n > MAX_EXHAUSTIVE:
        raise SizeCapError(f"exhaustive enumeration is capped at n = {MAX_EXHAUSTIVE}")
    for G in _unlabeled(n):
        if prop is None or prop.holds_graph(G):
            yield G


def census(max_n: int, min_n: int = 1) -> list[Multigraph]:
    """All unlabeled simple graphs with ``min_n <= n <= max_n``."""
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_unlabeled(n))
    return out


def labeled_weights(n: int) -> dict[bytes, int]:
    """canonical key -> n!/|Aut(G)| for every unlabeled graph of order n."""
    return {canonical(G): labeled_class_size(G) for G in enumerate_unlabeled(n)}


@lru_cache(maxsize=None)
def _multigraphs(max_edges: int) -> tuple[Multigraph, ...]:
    layers = [{canonical(Multigraph(0)): Multigraph(0)}]
    for _ in range(max_edges):
        nxt: dict[bytes, Multigraph] = {}
        for H in layers[-1].values():
            for u in range(H.n + 1):
                for v in range(u, H.n + 2):
                    if v == H.n + 1 and u < H.n:
                        continue
                    size = max(H.n, v + 1)
                    if size > MAX_ORDER:
                        continue
                    G = Multigraph(size, list(H.edges) + [(u, v)])
                    key = canonical(G)
                    if key not in nxt:
                        nxt[key] = canonical_graph(G)
        layers.append(nxt)
    out = []
    for layer in layers:
        out.extend(layer[k] for k in sorted(layer))
    return tuple(out)


def enumerate_multigraphs(max_edges: int) -> list[Multigraph]:
    """Unlabeled multigraphs (loops allowed) without isolated vertices.

    Covers every class with at most ``max_edges`` edges whose order fits the
    canonical-form cap; the empty graph on zero vertices is included.
    """
    return list(_multigraphs(max_edges))


def sample_gnp(n: int, p, seed: int) -> Multigraph:
    """G(n, p) with exact rational edge probability.

    Uses ``random.Random(seed)`` (Mersenne Twister); each pair ``(i, j)`` in
    lexicographic order is kept iff a uniform integer below the denominator
    of ``p`` is smaller than its numerator.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    num, den = p.numerator, p.denominator
    edges = [e for e in combinations(range(n), 2) if rng.randrange(den) < num]
    return Multigraph(n, edges)
