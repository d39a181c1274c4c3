"""Deletion/contraction(/extraction) recurrences and their closed forms.

A :class:`TGSpec` fixes the five coefficients of a Tutte-Grothendieck
recurrence::

    F(K_1)         = g1
    F(G), e loop   = g2 * F(G - e)
    F(G), e bridge = g3 * F(G / e)
    F(G), otherwise= g4 * F(G - e) + g5 * F(G / e)

and multiplicativity over components.  Every such invariant equals

    g1^k * g4^(m - r) * g5^r * T(G; g3/g5, g2/g4),   r = n - k,

which :func:`recipe_closed_form` exposes and :func:`verify_universality`
checks against the recursion.

A :class:`DCESpec` describes ``F = alpha F(G-e) + beta F(G/e) + gamma F(G+e)``
(the last term extracts e together with both endpoints) applied to every
non-loop edge, with ``k1`` for an isolated vertex and ``loop`` multiplying
``F(G - e)`` for a loop.  Such recurrences are not always well defined;
:func:`probe_well_defined` searches for edge-order discrepancies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from .canon import MAX_ORDER, canonical
from .errors import IllDefinedSpecError, InputError, SizeCapError
from .graph import (
    Multigraph,
    contract_edge,
    delete_edge,
    extract_edge,
    is_bridge,
    split_components,
)
from .invariants import tutte
from .poly import MultiPoly, parse_poly, substitute

MAX_RECURSION_EDGES = 30


def _as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, str):
        return parse_poly(value)
    return MultiPoly.const(Fraction(value))


@dataclass(frozen=True)
class TGSpec:
    g1: MultiPoly
    g2: MultiPoly
    g3: MultiPoly
    g4: MultiPoly
    g5: MultiPoly
    name: str = ""

    def __post_init__(self):
        for f in ("g1", "g2", "g3", "g4", "g5"):
            object.__setattr__(self, f, _as_poly(getattr(self, f)))

    @classmethod
    def of(cls, g1, g2, g3, g4, g5, name="") -> "TGSpec":
        return cls(g1, g2, g3, g4, g5, name)

    def variables(self) -> tuple[str, ...]:
        out: list[str] = []
        for g in (self.g1, self.g2, self.g3, self.g4, self.g5):
            out.extend(v for v in g.used_vars() if v not in out)
        return tuple(out)

    def __str__(self):
        return "TGSpec(" + ", ".join(
            f"{f}={getattr(self, f)}" for f in ("g1", "g2", "g3", "g4", "g5")
        ) + ")"


@dataclass(frozen=True)
class DCESpec:
    k1: MultiPoly
    loop: MultiPoly
    alpha: MultiPoly
    beta: MultiPoly
    gamma: MultiPoly
    name: str = ""

    def __post_init__(self):
        for f in ("k1", "loop", "alpha", "beta", "gamma"):
            object.__setattr__(self, f, _as_poly(getattr(self, f)))

    def variables(self) -> tuple[str, ...]:
        out: list[str] = []
        for g in (self.k1, self.loop, self.alpha, self.beta, self.gamma):
            out.extend(v for v in g.used_vars() if v not in out)
        return tuple(out)


ONE = MultiPoly.const(1)


def _chooser(order) -> Callable[[Multigraph], int]:
    if order is None:
        return lambda G: 0
    if isinstance(order, random.Random):
        return lambda G: order.randrange(G.m)
    return order


def _memo_table(memo):
    if memo is True:
        return {}
    if memo is False or memo is None:
        return None
    return memo


def eval_tg(G: Multigraph, spec: TGSpec, memo=True, order=None) -> MultiPoly:
    """Evaluate a TG recurrence.

    ``memo`` is True (fresh table), False, or a dict shared between calls
    with the same spec.  ``order`` picks the edge to expand: None takes the
    first edge, a ``random.Random`` picks uniformly, a callable returns an
    index.
    """
    if G.m > MAX_RECURSION_EDGES:
        raise SizeCapError(f"recursion is capped at m = {MAX_RECURSION_EDGES}")
    table = _memo_table(memo)
    choose = _chooser(order)

    def connected(C):
        if C.m == 0:
            return spec.g1
        key = canonical(C) if table is not None and C.n <= MAX_ORDER else None
        if key is not None and key in table:
            return table[key]
        i = choose(C)
        u, v = C.edges[i]
        if u == v:
            val = spec.g2 * whole(delete_edge(C, i))
        elif is_bridge(C, i):
            val = spec.g3 * whole(contract_edge(C, i))
        else:
            val = spec.g4 * whole(delete_edge(C, i)) + spec.g5 * whole(contract_edge(C, i))
        if key is not None:
            table[key] = val
        return val

    def whole(H):
        out = ONE
        for C in split_components(H):
            out = out * connected(C)
        return out

    return whole(G)


def eval_dce(G: Multigraph, spec: DCESpec, memo=True, order=None, check: bool = True) -> MultiPoly:
    """Evaluate a deletion/contraction/extraction recurrence.

    With ``check`` set, the spec is first probed on small multigraphs (once
    per spec) and :class:`IllDefinedSpecError` is raised if it is order
    dependent there.
    """
    if check:
        result = _cached_probe(spec)
        if not result.ok:
            raise IllDefinedSpecError(
                f"spec {spec.name or spec} depends on edge order; witness {result.graph}"
            )
    return _eval_dce(G, spec, memo, order)


def _eval_dce(G, spec, memo=True, order=None, top_edge=None):
    if G.m > MAX_RECURSION_EDGES:
        raise SizeCapError(f"recursion is capped at m = {MAX_RECURSION_EDGES}")
    table = _memo_table(memo)
    choose = _chooser(order)

    def expand(C, i):
        u, v = C.edges[i]
        if u == v:
            return spec.loop * whole(delete_edge(C, i))
        val = spec.alpha * whole(delete_edge(C, i)) if spec.alpha else MultiPoly.const(0)
        if spec.beta:
            val = val + spec.beta * whole(contract_edge(C, i))
        if spec.gamma:
            val = val + spec.gamma * whole(extract_edge(C, i))
        return val

    def connected(C):
        if C.m == 0:
            return spec.k1
        key = canonical(C) if table is not None and C.n <= MAX_ORDER else None
        if key is not None and key in table:
            return table[key]
        val = expand(C, choose(C))
        if key is not None:
            table[key] = val
        return val

    def whole(H):
        out = ONE
        for C in split_components(H):
            out = out * connected(C)
        return out

    if top_edge is not None:
        return expand(G, top_edge) if G.m else whole(G)
    return whole(G)


@dataclass
class ProbeResult:
    ok: bool
    checked: int
    graph: Multigraph | None = None
    values: tuple = ()

    def __bool__(self):
        return self.ok


def probe_well_defined(spec, corpus: Iterable[Multigraph], orders: int = 5, seed: int = 0) -> ProbeResult:
    """Look for a graph whose value depends on the order of edge expansion.

    For every connected corpus graph, each possible first edge is expanded
    (sub-results by the default order), then ``orders`` fully random orders
    are run.  Works for both DCESpec and TGSpec.
    """
    rng = random.Random(seed)
    checked = 0
    is_tg = isinstance(spec, TGSpec)
    for G in sorted(corpus, key=lambda H: (H.m, H.n)):
        checked += 1
        if G.m == 0:
            continue
        memo: dict = {}
        if is_tg:
            values = [eval_tg(G, spec, memo=memo, order=(lambda H, i=i, top=G: i if H is top else 0)) for i in range(G.m)]
        else:
            values = [_eval_dce(G, spec, memo=memo, top_edge=i) for i in range(G.m)]
        for _ in range(orders):
            r = random.Random(rng.random())
            if is_tg:
                values.append(eval_tg(G, spec, memo=True, order=r))
            else:
                values.append(_eval_dce(G, spec, memo=True, order=r))
        if any(v != values[0] for v in values):
            return ProbeResult(False, checked, G, tuple(values))
    return ProbeResult(True, checked)


_PROBES: dict = {}


def _cached_probe(spec: DCESpec) -> ProbeResult:
    if spec not in _PROBES:
        from .enumeration import enumerate_multigraphs

        _PROBES[spec] = probe_well_defined(spec, enumerate_multigraphs(3), orders=2)
    return _PROBES[spec]


# closed form


@dataclass(frozen=True)
class RecipeForm:
    spec: TGSpec
    bindings: dict = field(hash=False)

    def prefactor(self, n: int, m: int, k: int) -> MultiPoly:
        r = n - k
        s = self.spec
        return s.g1 ** k * s.g4 ** (m - r) * s.g5 ** r

    def cleared(self, G: Multigraph):
        """(R, D) with T(G; g3/g5, g2/g4) = R / D."""
        return substitute(tutte(G), self.bindings, reduce=False)

    def value(self, G: Multigraph) -> MultiPoly:
        R, D = self.cleared(G)
        return self.prefactor(G.n, G.m, G.k) * R / D


def recipe_closed_form(spec: TGSpec) -> RecipeForm:
    if spec.g4.is_zero() or spec.g5.is_zero():
        raise InputError("the closed form needs nonzero g4 and g5")
    return RecipeForm(spec, {"x": (spec.g3, spec.g5), "y": (spec.g2, spec.g4)})


@dataclass
class UniversalityReport:
    checked: int
    mismatches: int
    first_mismatch: Multigraph | None = None
    discrepancy: MultiPoly | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def verify_universality(spec: TGSpec, corpus: Iterable[Multigraph], prefactor=None, memo=None) -> UniversalityReport:
    """Compare recursion against prefactor * substituted Tutte on every graph.

    Equality is tested after clearing denominators: F * D == prefactor * R.
    ``prefactor`` overrides the recipe's (n, m, k) -> MultiPoly function.
    """
    form = recipe_closed_form(spec)
    pre = prefactor or form.prefactor
    table = {} if memo is None else memo
    checked = bad = 0
    first = diff = None
    for G in corpus:
        checked += 1
        F = eval_tg(G, spec, memo=table)
        R, D = form.cleared(G)
        delta = F * D - pre(G.n, G.m, G.k) * R
        if not delta.is_zero():
            bad += 1
            if first is None:
                first, diff = G, delta
    return UniversalityReport(checked, bad, first, diff)


def random_tg_spec(rng: random.Random, var: str = "x") -> TGSpec:
    """Coefficients a + b*var with small random rationals; g4, g5 nonzero."""

    def draw():
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        b = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
        return MultiPoly.const(a, (var,)) + MultiPoly.var(var) * b

    gs = [draw() for _ in range(5)]
    while gs[3].is_zero():
        gs[3] = draw()
    while gs[4].is_zero():
        gs[4] = draw()
    return TGSpec(*gs, name="random")


# presets and spec files

TG_PRESETS = {
    "tutte-identity": ("1", "y", "x", "1", "1"),
    "chromatic": ("x", "0", "x - 1", "1", "-1"),
    "potts-derived": ("q", "1 + v", "q + v", "1", "v"),
}

DCE_PRESETS = {
    "matching": ("1", "1", "1", "0", "x"),
    "chromatic": ("x", "0", "1", "-1", "0"),
    "potts": ("q", "1 + v", "1", "v", "0"),
}

_TG_KEYS = ("g1", "g2", "g3", "g4", "g5")
_DCE_KEYS = ("k1", "loop", "alpha", "beta", "gamma")


def tg_preset(name: str) -> TGSpec:
    try:
        return TGSpec(*TG_PRESETS[name], name=name)
    except KeyError:
        raise InputError(f"unknown TG preset {name!r}") from None


def dce_preset(name: str) -> DCESpec:
    try:
        return DCESpec(*DCE_PRESETS[name], name=name)
    except KeyError:
        raise InputError(f"unknown DCE preset {name!r}") from None


def parse_spec_text(text: str, name: str = ""):
    """Parse ``key = polynomial`` lines into a TGSpec (g1..g5) or DCESpec (k1, loop, alpha, beta, gamma)."""
    fields = {}
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        if "=" not in ln:
            raise InputError(f"expected 'key = polynomial', got {ln!r}")
        key, val = (s.strip() for s in ln.split("=", 1))
        fields[key] = val
    if set(fields) == set(_TG_KEYS):
        return TGSpec(*(fields[k] for k in _TG_KEYS), name=name)
    if set(fields) == set(_DCE_KEYS):
        return DCESpec(*(fields[k] for k in _DCE_KEYS), name=name)
    raise InputError(f"spec keys must be {_TG_KEYS} or {_DCE_KEYS}, got {tuple(fields)}")


def format_spec(spec) -> str:
    keys = _TG_KEYS if isinstance(spec, TGSpec) else _DCE_KEYS
    return "".join(f"{k} = {getattr(spec, k)}\n" for k in keys)


def load_spec(ref: str, kind: str = "tg"):
    presets = TG_PRESETS if kind == "tg" else DCE_PRESETS
    if ref in presets:
        return tg_preset(ref) if kind == "tg" else dce_preset(ref)
    path = Path(ref)
    if not path.exists():
        raise InputError(f"{ref!r} is neither a {kind} preset nor a file")
    spec = parse_spec_text(path.read_text(), name=path.stem)
    want = TGSpec if kind == "tg" else DCESpec
    if not isinstance(spec, want):
        raise InputError(f"{ref} does not hold a {kind} spec")
    return spec
