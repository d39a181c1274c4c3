"""Census-style experiments: mates, s.d.p.-equivalence, unimodality sampling."""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable

from .canon import canonical, labeled_class_size
from .enumeration import MAX_EXHAUSTIVE, enumerate_unlabeled, sample_gnp
from .errors import SizeCapError
from .graph import Multigraph
from .graph6 import encode_graph6
from .invariants import InvariantHandle, count_induced_property
from .poly import MultiPoly
from .properties import Prop
from .shape import real_rooted, unimodal


def fingerprint(value) -> str:
    """Exact text form of an invariant value; equal text iff equal value."""
    if isinstance(value, MultiPoly):
        return str(value)
    if isinstance(value, bytes):
        return value.hex()
    return repr(value)


# control invariants for census runs
COMPLETE_CONTROL = InvariantHandle("canonical-form", 0, canonical)
TRIVIAL_CONTROL = InvariantHandle("constant", 0, lambda G: MultiPoly.const(1))


def _check_n(n):
    if n > MAX_EXHAUSTIVE:
        raise SizeCapError(f"exhaustive experiments are capped at n = {MAX_EXHAUSTIVE}")


def fingerprint_table(handle: InvariantHandle, graphs: Iterable[Multigraph]) -> dict[bytes, str]:
    return {canonical(G): fingerprint(handle(G)) for G in graphs}


@dataclass
class CensusReport:
    invariant: str
    n: int
    total: int
    unique: int
    unique_fraction: float
    labeled_unique_fraction: float
    mate_classes: list[list[str]] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def mated(self) -> int:
        return self.total - self.unique

    @property
    def mate_pairs(self) -> list[tuple[str, str]]:
        return [tuple(c) for c in self.mate_classes if len(c) == 2]

    def to_json(self) -> dict:
        d = asdict(self)
        d["mated"] = self.mated
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CensusReport":
        d = {k: v for k, v in d.items() if k != "mated"}
        return cls(**d)


def mate_census(handle: InvariantHandle, n: int) -> CensusReport:
    """Bucket all order-n graphs by fingerprint and count singleton buckets.

    The labeled fraction weights each class by n!/|Aut(G)| over 2^C(n,2).
    """
    _check_n(n)
    t0 = time.perf_counter()
    buckets: dict[str, list[Multigraph]] = {}
    for G in enumerate_unlabeled(n):
        buckets.setdefault(fingerprint(handle(G)), []).append(G)
    total = sum(len(b) for b in buckets.values())
    singles = [b[0] for b in buckets.values() if len(b) == 1]
    labeled_total = 2 ** (n * (n - 1) // 2)
    labeled_unique = sum(labeled_class_size(G) for G in singles)
    classes = sorted(
        (sorted(encode_graph6(G) for G in b) for b in buckets.values() if len(b) > 1),
        key=lambda c: (len(c), c),
    )
    return CensusReport(
        invariant=handle.name,
        n=n,
        total=total,
        unique=len(singles),
        unique_fraction=len(singles) / total if total else 1.0,
        labeled_unique_fraction=float(Fraction(labeled_unique, labeled_total)),
        mate_classes=classes,
        runtime=time.perf_counter() - t0,
    )


def similarity_classes(n: int) -> dict[tuple[int, int, int], list[Multigraph]]:
    """Order-n graphs grouped by (n, m, k)."""
    _check_n(n)
    out: dict = {}
    for G in enumerate_unlabeled(n):
        out.setdefault((G.n, G.m, G.k), []).append(G)
    return out


@dataclass
class SdpResult:
    equivalent: bool
    n: int
    classes_checked: int
    witness: tuple[str, str] | None = None
    detail: str = ""

    def __bool__(self):
        return self.equivalent


def sdp_equivalent(f1: InvariantHandle, f2: InvariantHandle, n: int) -> SdpResult:
    """Do f1 and f2 split every similarity class of order-n graphs the same way?

    The witness is a pair of similar graphs on which exactly one of the two
    invariants agrees.
    """
    checked = 0
    for key, members in similarity_classes(n).items():
        checked += 1
        first1: dict[str, Multigraph] = {}
        first2: dict[str, Multigraph] = {}
        pair: dict[str, str] = {}
        back: dict[str, str] = {}
        for G in members:
            a, b = fingerprint(f1(G)), fingerprint(f2(G))
            if a in pair and pair[a] != b:
                H = first1[a]
                return SdpResult(False, n, checked, (encode_graph6(H), encode_graph6(G)),
                                 f"{f1.name} agrees, {f2.name} differs in class {key}")
            if b in back and back[b] != a:
                H = first2[b]
                return SdpResult(False, n, checked, (encode_graph6(H), encode_graph6(G)),
                                 f"{f2.name} agrees, {f1.name} differs in class {key}")
            pair[a], back[b] = b, a
            first1.setdefault(a, G)
            first2.setdefault(b, G)
    return SdpResult(True, n, checked)


@dataclass
class UnimodalReport:
    property: str
    n: int
    samples: int
    seed: int
    unimodal_count: int
    failures: list[str] = field(default_factory=list)

    @property
    def fraction(self) -> float | None:
        """None flags an undefined fraction (no samples)."""
        return self.unimodal_count / self.samples if self.samples else None

    def to_json(self) -> dict:
        d = asdict(self)
        d["fraction"] = self.fraction
        return d


def almost_unimodal_experiment(prop: Prop, n: int, samples: int, seed: int) -> UnimodalReport:
    """Fraction of G(n, 1/2) samples whose induced-property counts are unimodal."""
    if n > 20:
        raise SizeCapError("sampling experiments are capped at n = 20")
    rng = random.Random(seed)
    hits = 0
    failures = []
    for _ in range(samples):
        G = sample_gnp(n, Fraction(1, 2), rng.getrandbits(64))
        ok, _, _ = unimodal(count_induced_property(G, prop))
        if ok:
            hits += 1
        elif len(failures) < 10:
            failures.append(encode_graph6(G))
    return UnimodalReport(str(prop), n, samples, seed, hits, failures)


@dataclass(frozen=True)
class MembershipRow:
    graph: str
    member: bool
    real_rooted: bool
    poly: str


def realrooted_membership_experiment(prop: Prop, corpus: Iterable[Multigraph]) -> list[MembershipRow]:
    """Tabulate G in A against real-rootedness of sum_i c_i^A x^i; no verdict is drawn."""
    rows = []
    for G in corpus:
        P = MultiPoly.from_coeffs(count_induced_property(G, prop))
        rows.append(MembershipRow(encode_graph6(G), prop.holds_graph(G), real_rooted(P), str(P)))
    return rows


# serialization


def rows_to_csv(rows, header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([getattr(r, h) for h in header] if not isinstance(r, (list, tuple)) else r)
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
