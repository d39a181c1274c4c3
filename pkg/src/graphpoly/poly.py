"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` carries an ordered tuple of variable names and a dict
mapping exponent tuples to coefficients.  Coefficients are ``int`` whenever
they are integral and ``Fraction`` otherwise.  Binary operations on
polynomials with different registries extend the left operand's registry
with the right operand's new names.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import InputError


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


class MultiPoly:
    __slots__ = ("vars", "terms", "_key")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise InputError(f"duplicate variable in {self.vars}")
        clean = {}
        if terms:
            width = len(self.vars)
            for e, c in terms.items():
                if len(e) != width:
                    raise InputError(f"exponent vector {e} does not match {self.vars}")
                c = _norm(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._key = None

    # constructors

    @classmethod
    def const(cls, c, vars: Iterable[str] = ()) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, name: str, vars: Iterable[str] | None = None) -> "MultiPoly":
        vars = (name,) if vars is None else tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, var: str = "x") -> "MultiPoly":
        """Univariate polynomial from ascending coefficients."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)})

    # registry handling

    def with_vars(self, vars: Iterable[str]) -> "MultiPoly":
        """Re-express over ``vars``, which must contain every variable in use."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        used = self.used_vars()
        missing = [v for v in used if v not in pos]
        if missing:
            raise InputError(f"variables {missing} are not in {vars}")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for name, k in zip(self.vars, e):
                if k:
                    ne[pos[name]] = k
            out[tuple(ne)] = c
        p = MultiPoly.__new__(MultiPoly)
        p.vars, p.terms, p._key = vars, out, None
        return p

    def used_vars(self) -> tuple[str, ...]:
        return tuple(
            v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)
        )

    def _align(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(merged), other.with_vars(merged)

    # arithmetic

    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return MultiPoly._raw(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _norm(Fraction(other))
            if not c:
                return MultiPoly._raw(self.vars, {})
            return MultiPoly._raw(self.vars, {e: _norm(v * c) for e, v in self.terms.items()})
        a, b = self._align(other)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(a.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            q = divide_exact(self, other)
            if q is None:
                raise InputError("polynomial division is not exact")
            return q
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not polynomials")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @classmethod
    def _raw(cls, vars, terms):
        p = cls.__new__(cls)
        p.vars, p.terms, p._key = vars, terms, None
        return p

    # comparison

    def _normkey(self):
        if self._key is None:
            self._key = frozenset(
                (tuple(sorted((v, k) for v, k in zip(self.vars, e) if k)), c)
                for e, c in self.terms.items()
            )
        return self._key

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._normkey() == other._normkey()
        try:
            return self._normkey() == MultiPoly.const(other)._normkey()
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._normkey())

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise InputError(f"{self} is not constant")
        return next(iter(self.terms.values()), 0)

    # queries

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coeffs(self, var: str | None = None) -> list:
        """Ascending coefficients of a univariate polynomial."""
        used = self.used_vars()
        if len(used) > 1:
            raise InputError(f"{self} is not univariate")
        if var is None:
            var = used[0] if used else (self.vars[0] if self.vars else None)
        if not self.terms:
            return []
        i = self.vars.index(var) if var in self.vars else None
        d = self.degree(var) if i is not None else 0
        out = [0] * (d + 1)
        for e, c in self.terms.items():
            out[e[i] if i is not None else 0] = c
        return out

    def coefficient(self, **exps) -> object:
        e = tuple(exps.get(v, 0) for v in self.vars)
        if any(v not in self.vars and k for v, k in exps.items()):
            return 0
        return self.terms.get(e, 0)

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly._raw(self.vars, {})
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly._raw(self.vars, out)

    def evaluate(self, values: Mapping[str, object]):
        """Substitute numbers for some or all variables.

        Returns a number when every used variable is bound, else a MultiPoly
        over the remaining variables.
        """
        free = [v for v in self.vars if v not in values]
        idx_free = [self.vars.index(v) for v in free]
        bound = [(i, Fraction(values[v])) for i, v in enumerate(self.vars) if v in values]
        out: dict = {}
        for e, c in self.terms.items():
            val = Fraction(c)
            for i, x in bound:
                if e[i]:
                    val *= x ** e[i]
            if val:
                key = tuple(e[i] for i in idx_free)
                out[key] = out.get(key, 0) + val
        result = MultiPoly(tuple(free), out)
        if not result.used_vars():
            return _norm(Fraction(result.terms.get((0,) * len(free), 0)))
        return result

    def __call__(self, **values):
        return self.evaluate(values)

    # rendering

    def sorted_terms(self):
        """Terms in graded lexicographic order by registry position."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={self.vars})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exps": list(e), "num": Fraction(c).numerator, "den": Fraction(c).denominator}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data["vars"],
            {tuple(t["exps"]): Fraction(t["num"], t["den"]) for t in data["terms"]},
        )


def parse_poly(text: str, vars: Iterable[str] | None = None) -> MultiPoly:
    """Parse a polynomial expression such as ``"x^2 - 3/2*x*y + 1"``."""
    import sympy

    try:
        expr = sympy.sympify(text.replace("^", "**"), rational=True)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc}") from None
    names = sorted(str(s) for s in expr.free_symbols)
    if vars is not None:
        order = list(vars) + [v for v in names if v not in vars]
    else:
        order = names
    if not order:
        val = sympy.Rational(expr)
        return MultiPoly.const(Fraction(int(val.p), int(val.q)))
    try:
        p = sympy.Poly(expr, *[sympy.Symbol(v) for v in order])
    except sympy.PolynomialError as exc:
        raise InputError(f"{text!r} is not a polynomial: {exc}") from None
    terms = {}
    for e, c in p.terms():
        c = sympy.Rational(c)
        terms[e] = Fraction(int(c.p), int(c.q))
    return MultiPoly(order, terms)


def _leading(p: MultiPoly):
    return max(p.terms.items(), key=lambda t: (sum(t[0]), t[0]))


def divide_exact(num: MultiPoly, den: MultiPoly) -> MultiPoly | None:
    """Return ``num / den`` if ``den`` divides ``num`` exactly, else None."""
    if den.is_zero():
        raise InputError("division by the zero polynomial")
    num, den = num._align(den)
    le, lc = _leading(den)
    rem = num
    quot: dict = {}
    while rem.terms:
        e, c = _leading(rem)
        if any(x < y for x, y in zip(e, le)):
            return None
        qe = tuple(x - y for x, y in zip(e, le))
        qc = Fraction(c) / lc
        quot[qe] = quot.get(qe, 0) + qc
        rem = rem - MultiPoly._raw(num.vars, {qe: _norm(qc)}) * den
    return MultiPoly(num.vars, quot)


def substitute(P: MultiPoly, bindings: Mapping[str, object], reduce: bool = True):
    """Substitute rational functions for variables.

    ``bindings`` maps a variable to a MultiPoly, a number, or a pair
    ``(numerator, denominator)``.  Returns ``(R, D)`` with ``P(bindings) = R/D``.
    When ``reduce`` is set, binding denominators that divide both R and D are
    cancelled.
    """
    pairs = {}
    for v, b in bindings.items():
        if isinstance(b, tuple):
            n_, d_ = b
        else:
            n_, d_ = b, 1
        n_ = n_ if isinstance(n_, MultiPoly) else MultiPoly.const(n_)
        d_ = d_ if isinstance(d_, MultiPoly) else MultiPoly.const(d_)
        if d_.is_zero():
            raise InputError(f"zero denominator bound to {v}")
        pairs[v] = (n_, d_)
    free = tuple(v for v in P.vars if v not in pairs)
    top = {v: P.degree(v) for v in pairs}
    D = MultiPoly.const(1, free)
    for v, (_, d_) in pairs.items():
        if not d_.is_constant() or d_.constant_value() != 1:
            D = D * d_ ** max(top[v], 0)
    powcache: dict = {}

    def power(v, which, k):
        key = (v, which, k)
        if key not in powcache:
            powcache[key] = pairs[v][which] ** k
        return powcache[key]

    R = MultiPoly.const(0, free)
    for e, c in P.terms.items():
        term = MultiPoly(free, {tuple(k for name, k in zip(P.vars, e) if name in free): c})
        for name, k in zip(P.vars, e):
            if name not in pairs:
                continue
            n_, d_ = pairs[name]
            term = term * power(name, 0, k)
            if not d_.is_constant() or d_.constant_value() != 1:
                term = term * power(name, 1, top[name] - k)
        R = R + term
    if reduce and not D.is_constant():
        for v, (_, d_) in pairs.items():
            if d_.is_constant():
                continue
            for _ in range(max(top[v], 0)):
                qd = divide_exact(D, d_)
                qr = divide_exact(R, d_) if qd is not None else None
                if qd is None or qr is None:
                    break
                D, R = qd, qr
    if D.is_constant():
        c = D.constant_value()
        R, D = R / c, MultiPoly.const(1)
    return R, D


def falling_factorial(i: int, var: str = "x") -> MultiPoly:
    """x(x-1)...(x-i+1); equal to 1 when ``i == 0``."""
    if i < 0:
        raise InputError("falling factorial index must be non-negative")
    x = MultiPoly.var(var)
    out = MultiPoly.const(1, (var,))
    for j in range(i):
        out = out * (x - j)
    return out


def to_falling_basis(P: MultiPoly) -> dict[int, object]:
    """Coefficients b_i with P = sum b_i x_(i), by triangular elimination."""
    used = P.used_vars()
    if len(used) > 1:
        raise InputError("to_falling_basis needs a univariate polynomial")
    var = used[0] if used else "x"
    rest = P.with_vars((var,)) if used else MultiPoly((var,), {(0,): P.constant_value()} if P.terms else {})
    out: dict[int, object] = {}
    while rest.terms:
        d = rest.degree(var)
        c = rest.terms[(d,)]
        out[d] = c
        rest = rest - falling_factorial(d, var) * c
    return dict(sorted(out.items()))


def from_falling_basis(b: Mapping[int, object], var: str = "x") -> MultiPoly:
    out = MultiPoly.const(0, (var,))
    for i, c in b.items():
        if c:
            out = out + falling_factorial(i, var) * c
    return out
