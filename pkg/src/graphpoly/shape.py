"""Shape of coefficient sequences: unimodality, concavity, real-rootedness.

Real-rootedness is decided exactly: take the squarefree part ``P/gcd(P, P')``
and compare its number of distinct real roots (Sturm sequence sign changes
at minus and plus infinity) with its degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .poly import MultiPoly


@dataclass(frozen=True)
class CoeffSeq:
    """a_0..a_d with trailing zeros stripped (a_d != 0 unless empty)."""

    coeffs: tuple

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, P: MultiPoly) -> "CoeffSeq":
        return cls(P.coeffs())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)


@dataclass
class ShapeReport:
    unimodal: bool
    mode: int | None
    unimodal_witness: int | None
    log_concave: bool
    log_concave_witness: int | None
    alpha: Fraction | None = None
    alpha_concave: bool | None = None
    alpha_witness: int | None = None
    real_rooted: bool | None = None

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        if d["alpha"] is not None:
            d["alpha"] = str(d["alpha"])
        return d


def unimodal(a: Sequence) -> tuple[bool, int | None, int | None]:
    """Return (is_unimodal, mode, witness).

    The mode is the first index of the maximum.  On failure the witness is the
    bottom of the first valley: the index j where the sequence rises again
    after having fallen.
    """
    if not a:
        return True, None, None
    fell = False
    for j in range(len(a) - 1):
        if a[j] > a[j + 1]:
            fell = True
        elif a[j] < a[j + 1] and fell:
            return False, None, j
    top = max(a)
    return True, list(a).index(top), None


def alpha_concave(a: Sequence, alpha) -> tuple[bool, int | None]:
    """a_j^2 >= alpha * a_{j-1} a_{j+1} for 1 <= j <= d-1; returns (ok, first failing j)."""
    alpha = Fraction(alpha)
    for j in range(1, len(a) - 1):
        if a[j] * a[j] < alpha * a[j - 1] * a[j + 1]:
            return False, j
    return True, None


def log_concave(a: Sequence) -> tuple[bool, int | None]:
    return alpha_concave(a, 1)


def kurtz_alpha(d: int, i: int) -> Fraction:
    """The concavity constant (d-i+1)/(d-i) * (i+1)/i that real roots guarantee."""
    if not 1 <= i <= d - 1:
        raise InputError(f"index {i} outside 1..{d - 1}")
    return Fraction(d - i + 1, d - i) * Fraction(i + 1, i)


def kurtz_concave(a: Sequence) -> tuple[bool, int | None]:
    """Check a_i^2 >= alpha(d, i) a_{i-1} a_{i+1} at every interior index."""
    seq = CoeffSeq(a).coeffs
    d = len(seq) - 1
    for i in range(1, d):
        if seq[i] * seq[i] < kurtz_alpha(d, i) * seq[i - 1] * seq[i + 1]:
            return False, i
    return True, None


def shape_analyze(s, alpha=None, absolute: bool = False) -> ShapeReport:
    """Analyse a coefficient sequence (or univariate MultiPoly).

    ``absolute`` applies every test to |a_i|; real-rootedness is always about
    the signed polynomial.
    """
    seq = list(CoeffSeq.of(s) if isinstance(s, MultiPoly) else CoeffSeq(s))
    signed = seq
    if absolute:
        seq = [abs(c) for c in seq]
    uni, mode, uw = unimodal(seq)
    lc, lw = log_concave(seq)
    rep = ShapeReport(uni, mode, uw, lc, lw)
    if alpha is not None:
        rep.alpha = Fraction(alpha)
        rep.alpha_concave, rep.alpha_witness = alpha_concave(seq, alpha)
    if any(signed):
        rep.real_rooted = real_rooted(signed)
    return rep


# exact univariate arithmetic on ascending Fraction lists


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return [i * p[i] for i in range(1, len(p))]


def _divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lb
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = _trim(a)
    return _trim(q), a


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a] if a else a


def squarefree_part(p):
    p = _trim([Fraction(x) for x in p])
    g = _gcd(p, _deriv(p))
    if len(g) <= 1:
        return p
    q, r = _divmod(p, g)
    assert not r
    return q


def sturm_sequence(p):
    p = _trim([Fraction(x) for x in p])
    seq = [p, _trim(_deriv(p))]
    while seq[-1]:
        _, r = _divmod(seq[-2], seq[-1])
        seq.append([-x for x in r])
    return [s for s in seq if s]


def _sign_changes(vals):
    vals = [v for v in vals if v != 0]
    return sum(1 for x, y in zip(vals, vals[1:]) if (x > 0) != (y > 0))


def count_real_roots(p) -> int:
    """Number of distinct real roots of p (p != 0)."""
    seq = sturm_sequence(p)
    if not seq:
        raise InputError("the zero polynomial has no root count")
    at_pos = [s[-1] for s in seq]
    at_neg = [s[-1] * (-1) ** (len(s) - 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def real_rooted(p) -> bool:
    """True iff every complex root of p is real (counted with multiplicity).

    ``p`` is a univariate MultiPoly or an ascending coefficient sequence.
    Nonzero constants are real-rooted (no roots at all).
    """
    coeffs = p.coeffs() if isinstance(p, MultiPoly) else list(p)
    coeffs = _trim([Fraction(c) for c in coeffs])
    if not coeffs:
        raise InputError("real_rooted is undefined for the zero polynomial")
    sf = squarefree_part(coeffs)
    return count_real_roots(sf) == len(sf) - 1
