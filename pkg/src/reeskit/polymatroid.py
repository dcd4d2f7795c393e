"""Discrete polymatroids given by their sets of bases.

Bases are integer vectors in N^n of one common modulus |a| = sum of entries,
closed under the one-step exchange: whenever a_i > c_i some j with a_j < c_j
repairs a - e_i + e_j back into the set. Matroid basis indicator vectors are
the motivating special case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import (
    EmptyInput,
    IntegrityError,
    InvalidInstance,
    TheoremCounterexample,
    UnequalModuli,
    VariableAbsent,
)


@dataclass(frozen=True)
class PolymatroidBases:
    """Validated base set of a discrete polymatroid.

    vectors: lex-sorted tuple of distinct vectors in N^n, all of modulus d.
    """

    n: int
    d: int
    vectors: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "exponents": [list(v) for v in self.vectors],
            "polymatroid": True,
        }


@dataclass(frozen=True)
class ExchangeFailure:
    """Witness (a, c, i) that no j with a_j < c_j repairs a - e_i + e_j.

    The coordinate i is 1-indexed like everything else in this package.
    """

    vec_a: tuple[int, ...]
    vec_b: tuple[int, ...]
    index: int

    def to_json(self) -> dict:
        return {
            "error": "exchange_failure",
            "vec_a": list(self.vec_a),
            "vec_b": list(self.vec_b),
            "index": self.index,
        }


def _normalize_vectors(n, vectors):
    out = []
    for v in vectors:
        w = tuple(int(e) for e in v)
        if len(w) != n:
            raise InvalidInstance(f"vector {w} has dimension != {n}")
        if any(e < 0 for e in w):
            raise InvalidInstance(f"vector {w} has a negative entry")
        out.append(w)
    return sorted(set(out))


def check_polymatroid_bases(n: int, vectors):
    """Validate the exchange property, returning PolymatroidBases or a witness."""
    if n < 1:
        raise InvalidInstance("need at least one coordinate")
    vecs = _normalize_vectors(n, vectors)
    if not vecs:
        raise EmptyInput("the base family is empty")
    d = sum(vecs[0])
    for v in vecs:
        if sum(v) != d:
            raise UnequalModuli(vecs[0], v)
    vset = set(vecs)
    for a in vecs:
        for c in vecs:
            if a == c:
                continue
            for i in range(n):
                if a[i] <= c[i]:
                    continue
                ok = False
                for j in range(n):
                    if a[j] < c[j]:
                        moved = list(a)
                        moved[i] -= 1
                        moved[j] += 1
                        if tuple(moved) in vset:
                            ok = True
                            break
                if not ok:
                    return ExchangeFailure(a, c, i + 1)
    return PolymatroidBases(n, d, tuple(vecs))


def divide_by_variable(f: PolymatroidBases, i: int) -> PolymatroidBases:
    """Drop one unit of coordinate i from every base that has it.

    The result must again be a discrete polymatroid base set; if the
    re-validation ever failed that would contradict the closure property
    this operation relies on, so the failure is raised as a
    TheoremCounterexample instead of being returned quietly.
    """
    if i < 1 or i > f.n:
        raise InvalidInstance(f"coordinate {i} not in 1..{f.n}")
    kept = []
    for a in f.vectors:
        if a[i - 1] >= 1:
            b = list(a)
            b[i - 1] -= 1
            kept.append(tuple(b))
    if not kept:
        raise VariableAbsent(f"no base uses coordinate {i}")
    got = check_polymatroid_bases(f.n, kept)
    if isinstance(got, ExchangeFailure):
        raise TheoremCounterexample(
            "L3.10",
            {"input": f.to_json(), "coordinate": i, "witness": got.to_json()},
        )
    return got


def top_degree_subset(vectors):
    """Pairs (d, sub) where sub keeps the input-order vectors of maximal modulus."""
    vecs = [tuple(int(e) for e in v) for v in vectors]
    if not vecs:
        raise EmptyInput("no vectors given")
    if any(e < 0 for v in vecs for e in v):
        raise InvalidInstance("vectors must be nonnegative")
    d = max(sum(v) for v in vecs)
    return d, [v for v in vecs if sum(v) == d]


def symmetric_exchange_violations(f: PolymatroidBases) -> list[tuple]:
    """Triples (a, c, i) where no j with a_j < c_j swaps BOTH ways.

    A checker, not an axiom: callers decide what a nonempty list means.
    """
    vset = set(f.vectors)
    bad = []
    for a in f.vectors:
        for c in f.vectors:
            if a == c:
                continue
            for i in range(f.n):
                if a[i] <= c[i]:
                    continue
                ok = False
                for j in range(f.n):
                    if a[j] < c[j]:
                        am = list(a)
                        am[i] -= 1
                        am[j] += 1
                        cm = list(c)
                        cm[i] += 1
                        cm[j] -= 1
                        if tuple(am) in vset and tuple(cm) in vset:
                            ok = True
                            break
                if not ok:
                    bad.append((a, c, i + 1))
    return bad


def veronese_bases(n: int, d: int) -> PolymatroidBases:
    """All vectors of modulus d in N^n."""
    if n < 1 or d < 1:
        raise InvalidInstance("need n >= 1 and d >= 1")
    vecs = []
    for combo in combinations_with_replacement(range(n), d):
        v = [0] * n
        for c in combo:
            v[c] += 1
        vecs.append(tuple(v))
    got = check_polymatroid_bases(n, vecs)
    if isinstance(got, ExchangeFailure):
        raise IntegrityError(f"full degree-{d} family failed validation: {got.to_json()}")
    return got
