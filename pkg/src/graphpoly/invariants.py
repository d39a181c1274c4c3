"""Graph polynomials computed straight from their subset/partition expansions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import InputError, SizeCapError
from .graph import Multigraph, components
from .poly import MultiPoly, falling_factorial
from .properties import Clique, Context, Independent, Prop, parse_property

MAX_EDGES = 24
MAX_VERTICES = 24
MAX_COMPONENT_VERTICES = 20
MAX_HARARY = 10


def _cap_edges(G):
    if G.m > MAX_EDGES:
        raise SizeCapError(f"edge-subset expansion is capped at m = {MAX_EDGES} (got {G.m})")


def _cap_vertices(G, cap=MAX_VERTICES):
    if G.n > cap:
        raise SizeCapError(f"vertex-subset expansion is capped at n = {cap} (got {G.n})")


@lru_cache(maxsize=50_000)
def subset_statistics(G: Multigraph) -> dict[tuple[int, int], int]:
    """Map (|A|, k(V, A)) -> number of edge subsets A with those values.

    Walks the edges in order, branching only on edges that join two current
    components.  An edge whose endpoints are already joined stays that way,
    so it is tallied as a free edge and spread binomially at the end.
    """
    _cap_edges(G)
    edges = G.edges
    m = len(edges)
    parent = list(range(G.n))
    size = [1] * G.n
    leaves: Counter = Counter()

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(i, a, k, free):
        while i < m:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                break
            free += 1
            i += 1
        if i == m:
            leaves[(a, k, free)] += 1
            return
        walk(i + 1, a, k, free)
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        walk(i + 1, a + 1, k - 1, free)
        size[ru] -= size[rv]
        parent[rv] = rv

    walk(0, 0, G.n, 0)
    stats: Counter = Counter()
    for (a, k, free), cnt in leaves.items():
        for t in range(free + 1):
            stats[(a + t, k)] += cnt * comb(free, t)
    return dict(stats)


def potts(G: Multigraph) -> MultiPoly:
    """Z(G; q, v) = sum over edge subsets A of q^{k(V,A)} v^{|A|}."""
    terms = {(k, a): c for (a, k), c in subset_statistics(G).items()}
    return MultiPoly(("q", "v"), terms)


def chromatic(G: Multigraph) -> MultiPoly:
    """Chromatic polynomial as the Potts sum at v = -1."""
    out: Counter = Counter()
    for (a, k), c in subset_statistics(G).items():
        out[k] += -c if a & 1 else c
    return MultiPoly(("x",), {(k,): c for k, c in out.items()})


def tutte(G: Multigraph) -> MultiPoly:
    """Corank-nullity expansion with rank r(A) = n - k(V, A)."""
    kG = components(G)[0]
    rank_e = G.n - kG
    grouped: Counter = Counter()
    for (a, k), c in subset_statistics(G).items():
        r = G.n - k
        grouped[(rank_e - r, a - r)] += c
    out: Counter = Counter()
    for (i, j), c in grouped.items():
        for s in range(i + 1):
            ci = comb(i, s) * (-1) ** (i - s)
            for t in range(j + 1):
                out[(s, t)] += c * ci * comb(j, t) * (-1) ** (j - t)
    return MultiPoly(("x", "y"), dict(out))


def matching_counts(G: Multigraph) -> list[int]:
    """m_k(G) for k = 0..floor(n/2); parallel edges are distinct choices, loops never match."""
    mult = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        if u != v:
            mult[u][v] += 1
            mult[v][u] += 1
    full = (1 << G.n) - 1

    @lru_cache(maxsize=None)
    def count(avail):
        if avail == 0:
            return (1,)
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        total = list(count(rest))
        row = mult[v]
        for u in range(v + 1, G.n):
            if row[u] and rest >> u & 1:
                sub = count(rest & ~(1 << u))
                if len(sub) + 1 > len(total):
                    total.extend([0] * (len(sub) + 1 - len(total)))
                for j, c in enumerate(sub):
                    total[j + 1] += row[u] * c
        return tuple(total)

    counts = list(count(full))
    counts.extend([0] * (G.n // 2 + 1 - len(counts)))
    return counts


def matching_gen(G: Multigraph) -> MultiPoly:
    return MultiPoly.from_coeffs(matching_counts(G), "x")


def matching_defect(G: Multigraph) -> MultiPoly:
    """sum_k (-1)^k m_k x^{n-2k}."""
    terms = {(G.n - 2 * k,): (-1) ** k * c for k, c in enumerate(matching_counts(G))}
    return MultiPoly(("x",), terms)


def _backtrack_counts(G, cliques: bool):
    """Counts by size of independent sets (or cliques), grown in increasing vertex order."""
    adj = G.adjacency_masks()
    n = G.n
    counts = [0] * (n + 1)
    if cliques:
        allowed = [adj[v] & ~(1 << v) for v in range(n)]
        start = (1 << n) - 1
    else:
        allowed = [~adj[v] & ~(1 << v) for v in range(n)]
        start = sum(1 << v for v in range(n) if not adj[v] >> v & 1)

    def grow(size, cand):
        counts[size] += 1
        while cand:
            low = cand & -cand
            cand ^= low
            grow(size + 1, cand & allowed[low.bit_length() - 1])

    grow(0, start)
    return counts


def independence_poly(G: Multigraph) -> MultiPoly:
    _cap_vertices(G)
    return MultiPoly.from_coeffs(_backtrack_counts(G, False), "x")


def clique_poly(G: Multigraph) -> MultiPoly:
    _cap_vertices(G)
    return MultiPoly.from_coeffs(_backtrack_counts(G, True), "x")


def domination_poly(G: Multigraph) -> MultiPoly:
    _cap_vertices(G)
    closed = [a | (1 << v) for v, a in enumerate(G.adjacency_masks())]
    full = (1 << G.n) - 1
    counts = [0] * (G.n + 1)
    # cover[S] built incrementally from S without its lowest vertex
    cover = [0] * (1 << G.n)
    for S in range(1, 1 << G.n):
        low = S & -S
        cover[S] = cover[S ^ low] | closed[low.bit_length() - 1]
        if cover[S] == full:
            counts[bin(S).count("1")] += 1
    if G.n == 0:
        counts[0] = 1
    return MultiPoly.from_coeffs(counts, "x")


def subgraph_component_poly(G: Multigraph) -> MultiPoly:
    """Q(G; x, y) = sum over vertex subsets A of x^{|A|} y^{k(G[A])}."""
    _cap_vertices(G, MAX_COMPONENT_VERTICES)
    adj = G.adjacency_masks()
    out: Counter = Counter()
    for S in range(1 << G.n):
        rest, k = S, 0
        while rest:
            seen = rest & -rest
            frontier = seen
            while frontier:
                nb = 0
                f = frontier
                while f:
                    low = f & -f
                    nb |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nb & rest & ~seen
                seen |= frontier
            rest &= ~seen
            k += 1
        out[(bin(S).count("1"), k)] += 1
    return MultiPoly(("x", "y"), dict(out))


def count_induced_property(G: Multigraph, prop: Prop) -> tuple[int, ...]:
    """c_i = number of i-subsets S with G[S] satisfying ``prop``, for 0 <= i <= n."""
    _cap_vertices(G)
    if isinstance(prop, Independent):
        return tuple(_backtrack_counts(G, False))
    if isinstance(prop, Clique):
        return tuple(_backtrack_counts(G, True))
    ctx = Context.of(G)
    counts = [0] * (G.n + 1)
    for S in range(1 << G.n):
        if prop.holds(ctx, S):
            counts[bin(S).count("1")] += 1
    return tuple(counts)


def generating_poly(G: Multigraph, prop: Prop, domain: str = "vertex") -> MultiPoly:
    """sum of x^{|A|} over vertex (or edge) sets A satisfying ``prop``.

    In the edge domain a set B is judged on its edge-induced subgraph: the
    endpoints of B with exactly the edges of B.  ``dominating`` then asks
    whether those endpoints dominate G.
    """
    if domain == "vertex":
        return MultiPoly.from_coeffs(count_induced_property(G, prop), "x")
    if domain != "edge":
        raise InputError(f"domain must be 'vertex' or 'edge', not {domain!r}")
    _cap_edges(G)
    host = G.adjacency_masks()
    counts = [0] * (G.m + 1)
    for B in range(1 << G.m):
        adj = [0] * G.n
        S = 0
        size = 0
        b = B
        while b:
            low = b & -b
            u, v = G.edges[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            S |= (1 << u) | (1 << v)
            size += 1
            b ^= low
        if prop.holds(Context(adj, host, G.n), S):
            counts[size] += 1
    return MultiPoly.from_coeffs(counts, "x")


def _admissible_blocks(G: Multigraph, prop: Prop) -> list[bool]:
    ctx = Context.of(G)
    return [prop.holds(ctx, S) for S in range(1 << G.n)]


def harary_coefficients(G: Multigraph, prop: Prop) -> list[int]:
    """b_i = number of partitions of V(G) into i blocks each inducing a member of ``prop``."""
    if G.n > MAX_HARARY:
        raise SizeCapError(f"Harary polynomials are capped at n = {MAX_HARARY} (got {G.n})")
    ok = _admissible_blocks(G, prop)

    @lru_cache(maxsize=None)
    def parts(rem):
        if rem == 0:
            return (1,)
        low = rem & -rem
        others = rem ^ low
        total: list[int] = []
        # every block containing the lowest remaining vertex
        sub = others
        while True:
            block = sub | low
            if ok[block]:
                tail = parts(rem ^ block)
                if len(tail) + 1 > len(total):
                    total.extend([0] * (len(tail) + 1 - len(total)))
                for i, c in enumerate(tail):
                    total[i + 1] += c
            if sub == 0:
                break
            sub = (sub - 1) & others
        return tuple(total)

    b = list(parts((1 << G.n) - 1))
    b.extend([0] * (G.n + 1 - len(b)))
    return b


def harary(G: Multigraph, prop: Prop) -> MultiPoly:
    """sum_i b_i x_(i) expanded in the power basis."""
    out = MultiPoly.const(0, ("x",))
    for i, c in enumerate(harary_coefficients(G, prop)):
        if c:
            out = out + falling_factorial(i) * c
    return out


# registry


@dataclass(frozen=True)
class InvariantHandle:
    name: str
    arity: int
    compute: Callable[[Multigraph], object]

    def __call__(self, G: Multigraph):
        return self.compute(G)


_FIXED = {
    "chromatic": (1, chromatic),
    "tutte": (2, tutte),
    "potts": (2, potts),
    "matching": (1, matching_gen),
    "matching-defect": (1, matching_defect),
    "independence": (1, independence_poly),
    "clique": (1, clique_poly),
    "domination": (1, domination_poly),
    "subgraph-component": (2, subgraph_component_poly),
}


def invariant_names() -> list[str]:
    return sorted(_FIXED) + ["harary:<property>", "gen:<vertex|edge>:<property>", "tg:<preset|file>", "dce:<preset|file>"]


def get_invariant(name: str) -> InvariantHandle:
    """Look up an invariant by its command-line name."""
    if name in _FIXED:
        arity, fn = _FIXED[name]
        return InvariantHandle(name, arity, fn)
    if name.startswith("harary:"):
        prop = parse_property(name[len("harary:"):])
        return InvariantHandle(name, 1, lambda G: harary(G, prop))
    if name.startswith("gen:"):
        try:
            _, domain, expr = name.split(":", 2)
        except ValueError:
            raise InputError(f"expected gen:<vertex|edge>:<property>, got {name!r}") from None
        if domain not in ("vertex", "edge"):
            raise InputError(f"unknown domain {domain!r}")
        prop = parse_property(expr)
        return InvariantHandle(name, 1, lambda G: generating_poly(G, prop, domain))
    if name.startswith("tg:") or name.startswith("dce:"):
        from . import recursion

        kind, ref = name.split(":", 1)
        spec = recursion.load_spec(ref, kind)
        fn = recursion.eval_tg if kind == "tg" else recursion.eval_dce
        return InvariantHandle(name, len(spec.variables()), lambda G: fn(G, spec))
    raise InputError(f"unknown invariant {name!r}; known: {', '.join(invariant_names())}")
