"""A small language of vertex-subset predicates.

Grammar::

    prop   := term ('or' term)*
    term   := factor ('and' factor)*
    factor := 'not' factor | '(' prop ')' | atom
    atom   := independent | edgeless | clique | connected | triangle-free
            | dominating | maxdeg(k) | mindeg(k) | forbid-induced(g6, ...)

A property is evaluated on a vertex set S of a graph.  Every atom looks at
the subgraph on S, except ``dominating``, which asks whether S dominates the
host graph.  The empty graph is independent, a clique, and connected.
``forbid-induced()`` with no arguments holds for every graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .canon import canonical
from .errors import Graph6Error, PropertySyntaxError
from .graph import Multigraph
from .graph6 import parse_graph6


class Context:
    """Bitmask view of a graph under test and of the host graph.

    For vertex-subset evaluation both are the same graph.  Loops set a
    vertex's own bit in ``adj``; multiplicities are ignored.
    """

    __slots__ = ("n", "adj", "host_adj", "host_n", "_cache")

    def __init__(self, adj, host_adj=None, host_n=None):
        self.n = len(adj)
        self.adj = adj
        self.host_adj = adj if host_adj is None else host_adj
        self.host_n = self.n if host_n is None else host_n
        self._cache = {}

    @classmethod
    def of(cls, G: Multigraph) -> "Context":
        return cls(G.adjacency_masks())

    def induced(self, S: int) -> Multigraph:
        vs = [v for v in range(self.n) if S >> v & 1]
        pos = {v: i for i, v in enumerate(vs)}
        edges = []
        for v in vs:
            nb = self.adj[v] & S
            while nb:
                low = nb & -nb
                u = low.bit_length() - 1
                if u >= v:
                    edges.append((pos[v], pos[u]))
                nb ^= low
        return Multigraph(len(vs), edges)


def _bits(S):
    while S:
        low = S & -S
        yield low.bit_length() - 1
        S ^= low


class Prop:
    def holds(self, ctx: Context, S: int) -> bool:
        raise NotImplementedError

    def holds_graph(self, G: Multigraph) -> bool:
        """Does the whole graph G satisfy the property?"""
        return self.holds(Context.of(G), (1 << G.n) - 1)


@dataclass(frozen=True)
class And(Prop):
    left: Prop
    right: Prop

    def holds(self, ctx, S):
        return self.left.holds(ctx, S) and self.right.holds(ctx, S)

    def __str__(self):
        return f"({self.left} and {self.right})"


@dataclass(frozen=True)
class Or(Prop):
    left: Prop
    right: Prop

    def holds(self, ctx, S):
        return self.left.holds(ctx, S) or self.right.holds(ctx, S)

    def __str__(self):
        return f"({self.left} or {self.right})"


@dataclass(frozen=True)
class Not(Prop):
    inner: Prop

    def holds(self, ctx, S):
        return not self.inner.holds(ctx, S)

    def __str__(self):
        return f"not {self.inner}"


@dataclass(frozen=True)
class Independent(Prop):
    def holds(self, ctx, S):
        adj = ctx.adj
        return all(not adj[v] & S for v in _bits(S))

    def __str__(self):
        return "independent"


@dataclass(frozen=True)
class Clique(Prop):
    def holds(self, ctx, S):
        adj = ctx.adj
        return all((S & ~(1 << v)) & ~adj[v] == 0 for v in _bits(S))

    def __str__(self):
        return "clique"


@dataclass(frozen=True)
class Connected(Prop):
    def holds(self, ctx, S):
        if S == 0:
            return True
        seen = S & -S
        frontier = seen
        adj = ctx.adj
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= S & ~seen
            seen |= nxt
            frontier = nxt
        return seen == S

    def __str__(self):
        return "connected"


@dataclass(frozen=True)
class TriangleFree(Prop):
    def holds(self, ctx, S):
        adj = ctx.adj
        for v in _bits(S):
            nb = adj[v] & S & ~((1 << (v + 1)) - 1)
            for u in _bits(nb):
                if adj[u] & nb & ~(1 << u):
                    return False
        return True

    def __str__(self):
        return "triangle-free"


@dataclass(frozen=True)
class Dominating(Prop):
    def holds(self, ctx, S):
        covered = S
        for v in _bits(S):
            covered |= ctx.host_adj[v]
        return covered == (1 << ctx.host_n) - 1

    def __str__(self):
        return "dominating"


def _degree_in(ctx, v, S):
    return bin(ctx.adj[v] & S & ~(1 << v)).count("1")


@dataclass(frozen=True)
class MaxDeg(Prop):
    k: int

    def holds(self, ctx, S):
        return all(_degree_in(ctx, v, S) <= self.k for v in _bits(S))

    def __str__(self):
        return f"maxdeg({self.k})"


@dataclass(frozen=True)
class MinDeg(Prop):
    k: int

    def holds(self, ctx, S):
        return all(_degree_in(ctx, v, S) >= self.k for v in _bits(S))

    def __str__(self):
        return f"mindeg({self.k})"


@dataclass(frozen=True)
class ForbidInduced(Prop):
    graphs: tuple[str, ...]

    def __post_init__(self):
        forb = []
        for g6 in self.graphs:
            H = parse_graph6(g6)
            forb.append((H.n, canonical(H)))
        object.__setattr__(self, "_forb", tuple(forb))

    def holds(self, ctx, S):
        if not self._forb:
            return True
        key = (self, S)
        hit = ctx._cache.get(key)
        if hit is not None:
            return hit
        vs = list(_bits(S))
        ok = True
        for h, code in self._forb:
            if h > len(vs):
                continue
            for sub in combinations(vs, h):
                T = 0
                for v in sub:
                    T |= 1 << v
                if canonical(ctx.induced(T)) == code:
                    ok = False
                    break
            if not ok:
                break
        ctx._cache[key] = ok
        return ok

    def __str__(self):
        return f"forbid-induced({', '.join(self.graphs)})"


# parser

_ATOMS = {
    "independent": Independent,
    "edgeless": Independent,
    "clique": Clique,
    "connected": Connected,
    "triangle-free": TriangleFree,
    "dominating": Dominating,
}
_INT_ATOMS = {"maxdeg": MaxDeg, "mindeg": MinDeg}
_WORD = re.compile(r"[a-z][a-z\-]*")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, expected=None):
        raise PropertySyntaxError(msg, self.pos, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek_word(self):
        self.skip()
        m = _WORD.match(self.text, self.pos)
        return m.group(0) if m else None

    def expect(self, ch):
        self.skip()
        if self.text.startswith(ch, self.pos):
            self.pos += len(ch)
        else:
            self.error(f"unexpected {self.text[self.pos:self.pos + 1]!r}" if self.pos < len(self.text) else "unexpected end of input", repr(ch))

    def parse(self):
        node = self.prop()
        self.skip()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}", "'and', 'or' or end of input")
        return node

    def prop(self):
        node = self.term()
        while self.peek_word() == "or":
            self.pos += 2
            node = Or(node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek_word() == "and":
            self.pos += 3
            node = And(node, self.factor())
        return node

    def factor(self):
        self.skip()
        if self.text.startswith("(", self.pos):
            self.pos += 1
            node = self.prop()
            self.expect(")")
            return node
        word = self.peek_word()
        if word is None:
            self.error("unexpected " + (repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"), "an atom, 'not' or '('")
        if word == "not":
            self.pos += 3
            return Not(self.factor())
        return self.atom(word)

    def atom(self, word):
        start = self.pos
        self.pos += len(word)
        if word in _ATOMS:
            return _ATOMS[word]()
        if word in _INT_ATOMS:
            self.expect("(")
            self.skip()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m:
                self.error("missing integer argument", "an integer")
            self.pos = m.end()
            self.expect(")")
            return _INT_ATOMS[word](int(m.group(0)))
        if word == "forbid-induced":
            self.expect("(")
            close = self.text.find(")", self.pos)
            if close < 0:
                self.error("unterminated argument list", "')'")
            raw = self.text[self.pos:close]
            args = tuple(a.strip() for a in raw.split(",") if a.strip())
            try:
                node = ForbidInduced(args)
            except Graph6Error as exc:
                self.error(f"malformed graph6 argument: {exc}")
            self.pos = close + 1
            return node
        self.pos = start
        self.error(f"unknown atom {word!r}", "one of " + ", ".join(sorted(list(_ATOMS) + list(_INT_ATOMS) + ["forbid-induced"])))


def parse_property(text: str) -> Prop:
    return _Parser(text).parse()


TAUTOLOGY = "forbid-induced()"
