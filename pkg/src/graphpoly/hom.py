"""Weighted homomorphism counts Z_A and the rank/bipartiteness dichotomy."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import sympy

from .errors import InputError, SizeCapError
from .graph import Multigraph

BRUTE_FORCE_CAP = 10 ** 7


class WeightedTemplate:
    """Symmetric k x k matrix of non-negative rationals."""

    __slots__ = ("a",)

    def __init__(self, rows: Sequence[Sequence]):
        a = tuple(tuple(Fraction(x) for x in row) for row in rows)
        k = len(a)
        if any(len(row) != k for row in a):
            raise InputError("template matrix must be square")
        for i in range(k):
            for j in range(k):
                if a[i][j] < 0:
                    raise InputError(f"negative weight at ({i}, {j})")
                if a[i][j] != a[j][i]:
                    raise InputError(f"template is not symmetric at ({i}, {j})")
        self.a = a

    @property
    def k(self) -> int:
        return len(self.a)

    @classmethod
    def rank_one(cls, h: Sequence) -> "WeightedTemplate":
        h = [Fraction(x) for x in h]
        return cls([[x * y for y in h] for x in h])

    @classmethod
    def adjacency(cls, H: Multigraph) -> "WeightedTemplate":
        return cls(H.adjacency_matrix())

    def __eq__(self, other):
        return isinstance(other, WeightedTemplate) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __repr__(self):
        return f"WeightedTemplate({[[str(x) for x in r] for r in self.a]})"


def parse_template(text: str) -> WeightedTemplate:
    """First line k, then k rows of k entries (integers or p/q)."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty template")
    try:
        k = int(lines[0][0])
        rows = [[Fraction(tok) for tok in ln] for ln in lines[1:]]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad template entry: {exc}") from None
    if len(lines[0]) != 1 or len(rows) != k or any(len(r) != k for r in rows):
        raise InputError(f"template must be a size line followed by {k} rows of {k} entries")
    return WeightedTemplate(rows)


def read_template(path) -> WeightedTemplate:
    try:
        return parse_template(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read template: {exc}") from None


def format_template(A: WeightedTemplate) -> str:
    return f"{A.k}\n" + "".join(" ".join(str(x) for x in row) + "\n" for row in A.a)


def z_a(G: Multigraph, A: WeightedTemplate) -> Fraction:
    """Sum over all maps s: V -> [k] of the product of A[s(u)][s(v)] over edges.

    Plain backtracking over the vertices in order, pruning zero partial
    products.  Refuses instances with k^n above the brute-force cap.
    """
    k, n = A.k, G.n
    if k ** n > BRUTE_FORCE_CAP:
        raise SizeCapError(f"k^n = {k}^{n} exceeds the brute-force cap {BRUTE_FORCE_CAP}")
    # back[v]: earlier endpoints of edges at v (repeated for multi-edges), loops[v]
    back: list[list[int]] = [[] for _ in range(n)]
    loops = [0] * n
    for u, v in G.edges:
        if u == v:
            loops[u] += 1
        else:
            back[v].append(u)
    a = A.a
    color = [0] * n

    def go(v):
        if v == n:
            return Fraction(1)
        total = Fraction(0)
        for c in range(k):
            w = a[c][c] ** loops[v]
            for u in back[v]:
                if not w:
                    break
                w *= a[color[u]][c]
            if w:
                color[v] = c
                total += w * go(v + 1)
        return total

    return go(0)


def exact_rank(rows) -> int:
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[int, ...]
    bipartite: bool
    rank: int
    tractable: bool

    @property
    def rationale(self) -> str:
        kind = "bipartite" if self.bipartite else "non-bipartite"
        bound = 2 if self.bipartite else 1
        rel = "<=" if self.tractable else ">"
        return f"component {list(self.vertices)}: {kind}, rank {self.rank} {rel} {bound}"


@dataclass(frozen=True)
class Dichotomy:
    verdict: str
    components: tuple[ComponentVerdict, ...]

    @property
    def tractable(self) -> bool:
        return self.verdict == "Tractable"

    def __str__(self):
        return "\n".join([self.verdict] + [c.rationale for c in self.components])


def _support_components(A: WeightedTemplate):
    k = A.k
    seen = [False] * k
    out = []
    for s in range(k):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            i = stack.pop()
            for j in range(k):
                if A.a[i][j] and not seen[j]:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def _support_bipartite(A: WeightedTemplate, comp) -> bool:
    side = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        i = stack.pop()
        for j in comp:
            if not A.a[i][j]:
                continue
            if j == i:
                return False  # a loop is an odd cycle
            if j not in side:
                side[j] = 1 - side[i]
                stack.append(j)
            elif side[j] == side[i]:
                return False
    return True


def classify_dichotomy(A: WeightedTemplate) -> Dichotomy:
    """Tractable iff every support component is non-bipartite of rank <= 1 or bipartite of rank <= 2."""
    verdicts = []
    for comp in _support_components(A):
        bip = _support_bipartite(A, comp)
        rank = exact_rank([[A.a[i][j] for j in comp] for i in comp])
        ok = rank <= (2 if bip else 1)
        verdicts.append(ComponentVerdict(comp, bip, rank, ok))
    verdict = "Tractable" if all(c.tractable for c in verdicts) else "SharpPHard"
    return Dichotomy(verdict, tuple(verdicts))


def z_a_rank1(G: Multigraph, A: WeightedTemplate) -> Fraction:
    """Z_A(G) for A = h h^T via prod_v sum_c h_c^deg(v).

    h itself may be irrational, so a row g = A[p] = h_p h is used instead:
    prod_v sum_c g_c^deg(v) = h_p^(2m) Z_A(G) and h_p^2 = A[p][p].
    """
    if exact_rank([list(r) for r in A.a]) > 1:
        raise InputError("z_a_rank1 needs a template of rank at most 1")
    deg = G.degrees()
    p = next((i for i in range(A.k) if A.a[i][i]), None)
    if p is None:  # zero matrix
        return Fraction(A.k ** G.n) if G.m == 0 else Fraction(0)
    g = A.a[p]
    out = Fraction(1)
    for d in deg:
        out *= sum(x ** d for x in g)
    return out / A.a[p][p] ** G.m
