"""Tree decompositions and a bounded-width dynamic program for the chromatic polynomial.

The decomposition comes from a min-fill elimination order.  The coloring
DP runs on a nice decomposition; its states are equality patterns of a bag
(which bag vertices share a color) rather than explicit colorings, so a bag
of size b has at most Bell(b) states independent of q.  For each q in 0..n
the DP yields the number of proper q-colorings and the polynomial is
recovered exactly by Newton forward differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import InputError, SizeCapError
from .graph import Multigraph
from .poly import MultiPoly, from_falling_basis

MAX_FPT_WIDTH = 8


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def _neighbour_sets(G: Multigraph):
    nb = [set() for _ in range(G.n)]
    for u, v in G.edges:
        if u != v:
            nb[u].add(v)
            nb[v].add(u)
    return nb


def min_fill_order(G: Multigraph) -> list[int]:
    """Greedy elimination order; ties broken by degree, then label."""
    nb = _neighbour_sets(G)
    alive = set(range(G.n))
    order = []
    while alive:
        def fill(v):
            ns = list(nb[v])
            return sum(1 for i, a in enumerate(ns) for b in ns[i + 1:] if b not in nb[a])

        v = min(alive, key=lambda v: (fill(v), len(nb[v]), v))
        ns = nb[v]
        for a in ns:
            nb[a] |= ns - {a}
            nb[a].discard(v)
        alive.discard(v)
        order.append(v)
    return order


def tree_decompose(G: Multigraph) -> TreeDecomposition:
    """Min-fill heuristic decomposition: one bag per vertex, in elimination order."""
    if G.n == 0:
        return TreeDecomposition((frozenset(),), ())
    order = min_fill_order(G)
    pos = {v: i for i, v in enumerate(order)}
    nb = _neighbour_sets(G)
    bags = []
    later_sets = []
    for v in order:
        later = {u for u in nb[v] if pos[u] > pos[v]}
        for a in later:
            nb[a] |= later - {a}
        bags.append(frozenset(later | {v}))
        later_sets.append(later)
    edges = []
    roots = []
    for i, later in enumerate(later_sets):
        if later:
            j = min(pos[u] for u in later)
            edges.append((i, j))
        else:
            roots.append(i)
    # join the trees of different components into one tree
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(edges))


def validate(G: Multigraph, td: TreeDecomposition) -> list[str]:
    """Return the violated conditions (empty list when td is valid)."""
    problems = []
    nbags = len(td.bags)
    if len(td.edges) != max(nbags - 1, 0):
        problems.append("tree: wrong number of edges")
    adj = [[] for _ in range(nbags)]
    for a, b in td.edges:
        adj[a].append(b)
        adj[b].append(a)
    if nbags:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != nbags:
            problems.append("tree: not connected")
    covered = set().union(*td.bags) if td.bags else set()
    if covered != set(range(G.n)):
        problems.append("vertex coverage")
    if not all(any(u in b and v in b for b in td.bags) for u, v in G.edges):
        problems.append("edge coverage")
    for v in range(G.n):
        holding = {i for i, b in enumerate(td.bags) if v in b}
        if not holding:
            continue
        start = next(iter(holding))
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j in holding and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if seen != holding:
            problems.append(f"running intersection for vertex {v}")
            break
    return problems


# nice decompositions: ("leaf",), ("introduce", v, child), ("forget", v, child), ("join", left, right)


def nice_decomposition(td: TreeDecomposition):
    """Convert to a rooted nice decomposition whose root bag is empty.

    Returns (nodes, root) where each node is (kind, bag, payload...).
    """
    nodes: list[tuple] = []
    adj = [[] for _ in td.bags]
    for a, b in td.edges:
        adj[a].append(b)
        adj[b].append(a)

    def add(node):
        nodes.append(node)
        return len(nodes) - 1

    def morph(child, have: frozenset, want: frozenset):
        # forget extra vertices first, then introduce missing ones
        cur = have
        for v in sorted(have - want):
            cur = cur - {v}
            child = add(("forget", cur, v, child))
        for v in sorted(want - have):
            cur = cur | {v}
            child = add(("introduce", cur, v, child))
        return child

    def build(i, parent):
        bag = td.bags[i]
        subs = []
        for j in adj[i]:
            if j != parent:
                subs.append(morph(build(j, i), td.bags[j], bag))
        if not subs:
            return morph(add(("leaf", frozenset())), frozenset(), bag)
        node = subs[0]
        for other in subs[1:]:
            node = add(("join", bag, node, other))
        return node

    top = build(0, -1)
    root = morph(top, td.bags[0], frozenset())
    return nodes, root


def _canon(pattern):
    """Relabel block ids to first-occurrence order (a restricted growth string)."""
    ids = {}
    return tuple(ids.setdefault(b, len(ids)) for b in pattern)


def count_colorings_dp(G: Multigraph, nodes, root, q: int) -> int:
    """Proper q-colorings via the nice decomposition.

    A table maps an equality pattern over the sorted bag to the number of
    colorings of the already-forgotten vertices that extend any one fixed
    bag coloring with that pattern.
    """
    nb = [set() for _ in range(G.n)]
    for u, v in G.edges:
        nb[u].add(v)
        nb[v].add(u)
    tables: dict[int, tuple[tuple, dict]] = {}
    for idx, node in enumerate(nodes):  # children always precede parents
        kind, bag = node[0], node[1]
        order = tuple(sorted(bag))
        if kind == "leaf":
            tables[idx] = (order, {(): 1})
            continue
        if kind == "join":
            o1, t1 = tables.pop(node[2])
            o2, t2 = tables.pop(node[3])
            tables[idx] = (order, {p: c * t2[p] for p, c in t1.items() if p in t2})
            continue
        v, child = node[2], node[3]
        corder, table = tables.pop(child)
        out: dict = {}
        if kind == "introduce":
            at = order.index(v)
            for p, c in table.items():
                blocks = max(p, default=-1) + 1
                clash = {p[i] for i, u in enumerate(corder) if u in nb[v]}
                for b in range(blocks + 1):
                    if b in clash or (b == blocks and blocks + 1 > q):
                        continue
                    newp = _canon(p[:at] + (b,) + p[at:])
                    out[newp] = out.get(newp, 0) + c
        else:  # forget
            at = corder.index(v)
            for p, c in table.items():
                rest = p[:at] + p[at + 1:]
                newp = _canon(rest)
                if p[at] in rest:
                    w = c
                else:
                    w = c * (q - len(set(rest)))
                if w:
                    out[newp] = out.get(newp, 0) + w
        tables[idx] = (order, out)
    return tables[root][1].get((), 0)


def chromatic_fpt(G: Multigraph, max_width: int = MAX_FPT_WIDTH) -> MultiPoly:
    """Chromatic polynomial from n+1 DP colorings counts and exact interpolation."""
    if G.loops():
        return MultiPoly.const(0, ("x",))
    td = tree_decompose(G)
    if td.width > max_width:
        raise SizeCapError(f"heuristic width {td.width} exceeds {max_width}")
    bad = validate(G, td)
    if bad:
        raise InputError(f"internal decomposition failed validation: {bad}")
    nodes, root = nice_decomposition(td)
    values = [count_colorings_dp(G, nodes, root, q) for q in range(G.n + 1)]
    # Newton forward differences at 0..n give the falling-factorial coefficients
    b = {}
    diffs = values
    for i in range(G.n + 1):
        b[i] = diffs[0] // factorial(i) if diffs[0] % factorial(i) == 0 else None
        if b[i] is None:
            raise InputError("non-integral interpolation coefficient")
        diffs = [y - x for x, y in zip(diffs, diffs[1:])]
    return from_falling_basis(b, "x")
