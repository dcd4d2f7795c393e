"""Affine semigroups of Rees cones: Hilbert bases and normality certificates.

The semigroup generated by a Rees cone's generators is normal exactly when
it exhausts every lattice point of the cone, i.e. when the generators are an
integral Hilbert basis. The Hilbert basis of the full lattice-point
semigroup is computed by triangulating the cone into simplicial subcones,
enumerating the lattice points of each half-open fundamental parallelepiped,
and reducing the candidates to the irreducible ones by pairwise subtraction.
Membership in the generated subsemigroup is a memoized DP over the lifting
budget and the coordinatewise residual. Integer arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    CapExceeded,
    EmptyInput,
    IntegrityError,
    InvalidInstance,
    MethodDisagreement,
    PreconditionFailed,
    UnequalModuli,
)
from .exactlat import adjugate, determinant, dot, primitive, rank, vsub
from .matroid import MonomialIdeal
from .reescone import (
    ConeMembership,
    FacetSystem,
    ReesCone,
    Verdict,
    classify,
    extreme_generators,
    facet_normals,
    facet_tight_sets,
    rees_generators,
)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class HilbertBasisResult:
    """Lex-sorted irreducible generators plus how they were obtained."""

    elements: tuple[tuple[int, ...], ...]
    simplices: int
    parallelepiped_points: int
    candidates: int

    def method(self) -> dict:
        return {
            "algorithm": "triangulation+parallelepiped",
            "simplices": self.simplices,
            "parallelepiped_points": self.parallelepiped_points,
            "candidates": self.candidates,
        }

    def to_json(self) -> dict:
        return {
            "elements": [list(h) for h in self.elements],
            "method": self.method(),
        }


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many lattice points, kept as its generators."""

    n: int
    vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInstance("need at least one coordinate")
        verts = sorted({tuple(int(e) for e in v) for v in self.vertices})
        if not verts:
            raise EmptyInput("a polytope needs at least one point")
        if any(len(v) != self.n for v in verts):
            raise InvalidInstance("points of mixed dimension")
        object.__setattr__(self, "vertices", tuple(verts))

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> "LatticePolytope":
        return cls(ideal.n, ideal.exponents)


@dataclass(frozen=True)
class NormalityCertificate:
    verdict: str  # "normal" | "not_normal"
    witness: tuple[int, ...] | None
    method: str  # "hilbert" | "quasi_ehrhart" | "both"

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        out["method"] = self.method
        return out


def _column_hnf_diagonal(mat) -> list[int]:
    """Diagonal of a lower-triangular column Hermite form of a nonsingular
    square integer matrix. Column operations only, so the column lattice is
    preserved."""
    m = len(mat)
    cols = [[mat[i][j] for i in range(m)] for j in range(m)]
    for i in range(m):
        while True:
            js = [j for j in range(i, m) if cols[j][i] != 0]
            j0 = min(js, key=lambda j: (abs(cols[j][i]), j))
            if j0 != i:
                cols[i], cols[j0] = cols[j0], cols[i]
            p = cols[i][i]
            done = True
            for j in range(i + 1, m):
                if cols[j][i]:
                    f = cols[j][i] // p
                    cols[j] = [a - f * b for a, b in zip(cols[j], cols[i])]
                    if cols[j][i]:
                        done = False
            if done:
                break
        if cols[i][i] < 0:
            cols[i] = [-e for e in cols[i]]
    return [cols[i][i] for i in range(m)]


def _parallelepiped_points(simplex) -> set[tuple[int, ...]]:
    """Nonzero lattice points of {sum lam_i r_i : 0 <= lam_i < 1}.

    One point per coset of Z^m modulo the ray lattice: walk the diagonal box
    of a column Hermite form, then reduce each representative into the
    half-open parallelepiped with one exact rational solve.
    """
    m = len(simplex)
    colmat = [[simplex[j][i] for j in range(m)] for i in range(m)]
    adj, det = adjugate(colmat)
    if det < 0:
        adj = [[-e for e in row] for row in adj]
        det = -det
    if det == 0:
        raise IntegrityError("simplex rays are dependent")
    diag = _column_hnf_diagonal(colmat)
    points = set()
    for x in product(*(range(d) for d in diag)):
        floors = [
            sum(adj[i][k] * x[k] for k in range(m)) // det for i in range(m)
        ]
        p = tuple(
            x[i] - sum(colmat[i][j] * floors[j] for j in range(m)) for i in range(m)
        )
        if any(p):
            points.add(p)
    return points


def _triangulate(rays) -> tuple[tuple, ...]:
    return _triangulate_cached(tuple(sorted(rays)))


@lru_cache(maxsize=None)
def _triangulate_cached(rays: tuple) -> tuple[tuple, ...]:
    """Pulling triangulation: cone off the lex-smallest ray over every facet
    that avoids it. The subcones cover the cone, which is all downstream
    enumeration needs."""
    if not rays:
        return ()
    if rank(rays) == len(rays):
        return (rays,)
    apex = rays[0]
    simplices = []
    for tight in facet_tight_sets(rays):
        if apex in tight:
            continue
        for sub in _triangulate_cached(tuple(sorted(tight))):
            simplices.append(sub + (apex,))
    return tuple(simplices)


def hilbert_basis(
    cone: ReesCone, facets: FacetSystem | None = None, cap: int = DEFAULT_CAP
) -> HilbertBasisResult:
    """Irreducible generating set of (lattice points of the cone, +).

    Candidates are the primitive extreme generators together with every
    nonzero parallelepiped point of a covering triangulation; reduction
    keeps h iff no other candidate c leaves h - c inside the cone. The cap
    bounds the total parallelepiped lattice points enumerated. Uniqueness
    comes with pointedness, which holds as the generators sit in the first
    orthant.
    """
    fs = facets if facets is not None else facet_normals(cone)
    extreme = extreme_generators(cone, fs)
    simplices = _triangulate(extreme)
    points: set[tuple[int, ...]] = set()
    total = 0
    for s in simplices:
        vol = abs(determinant(s))
        total += vol
        if total > cap:
            raise CapExceeded(
                f"parallelepiped budget {cap} exceeded at {total} lattice points"
            )
        if vol > 1:
            points.update(_parallelepiped_points(s))
    candidates = sorted(set(extreme) | points)
    elements = []
    for h in candidates:
        if not any(c != h and fs.contains(vsub(h, c)) for c in candidates):
            elements.append(h)
    return HilbertBasisResult(tuple(elements), len(simplices), total, len(candidates))


def _decompose(target, budget: int, vectors, exact: bool) -> bool:
    """Is target >= sum of exactly `budget` vectors (== when exact)?

    DP over (vector index, remaining budget, coordinatewise residual).
    """
    moduli = {sum(v) for v in vectors}
    degree = moduli.pop() if len(moduli) == 1 else None
    memo: dict = {}

    def rec(j: int, b: int, residual) -> bool:
        if b == 0:
            return not exact or not any(residual)
        if j == len(vectors):
            return False
        if exact and degree is not None and sum(residual) != b * degree:
            return False
        key = (j, b, residual)
        hit = memo.get(key)
        if hit is not None:
            return hit
        v = vectors[j]
        cmax = b
        for k, vk in enumerate(v):
            if vk:
                cmax = min(cmax, residual[k] // vk)
        out = False
        for c in range(cmax, -1, -1):
            nxt = tuple(residual[k] - c * v[k] for k in range(len(residual)))
            if rec(j + 1, b - c, nxt):
                out = True
                break
        memo[key] = out
        return out

    return rec(0, budget, tuple(target))


def semigroup_member(point, cone: ReesCone) -> bool:
    """Membership of (a, b) in the semigroup generated by the cone's
    generators: some multiset of b lifted generators fits under a, the rest
    is soaked up by units."""
    p = tuple(int(e) for e in point)
    if len(p) != cone.dim:
        raise InvalidInstance(f"point of dimension {len(p)}, cone of {cone.dim}")
    a, b = p[:-1], p[-1]
    if b < 0 or any(e < 0 for e in a):
        return False
    lifted = tuple(g[:-1] for g in cone.lifted())
    return _decompose(a, b, lifted, exact=False)


@lru_cache(maxsize=None)
def _ideal_geometry(ideal: MonomialIdeal):
    cone = rees_generators(ideal)
    return cone, facet_normals(cone)


@lru_cache(maxsize=None)
def _ideal_hilbert(ideal: MonomialIdeal, cap: int) -> HilbertBasisResult:
    cone, fs = _ideal_geometry(ideal)
    return hilbert_basis(cone, fs, cap)


def is_normal(ideal: MonomialIdeal, cap: int = DEFAULT_CAP) -> NormalityCertificate:
    """Direct route: normal iff every Hilbert basis element is a semigroup
    member. Principal ideals short-circuit: their Rees cone is simplicial
    and unimodular."""
    if ideal.q == 1:
        return NormalityCertificate("normal", None, "hilbert")
    cone, fs = _ideal_geometry(ideal)
    hb = _ideal_hilbert(ideal, cap)
    for h in hb.elements:
        if not semigroup_member(h, cone):
            return NormalityCertificate("not_normal", h, "hilbert")
    return NormalityCertificate("normal", None, "hilbert")


@lru_cache(maxsize=None)
def _lifted_membership(vertices: tuple) -> ConeMembership:
    return ConeMembership(tuple((*v, 1) for v in vertices))


def _box_points(lo, hi, total):
    """Lex-ascending integer points of prod [lo_k, hi_k], restricted to
    coordinate sum == total when total is not None."""
    n = len(lo)
    suffix_lo = [0] * (n + 1)
    suffix_hi = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_lo[k] = suffix_lo[k + 1] + lo[k]
        suffix_hi[k] = suffix_hi[k + 1] + hi[k]
    point = [0] * n

    def rec(k: int, remaining):
        if k == n:
            if total is None or remaining == 0:
                yield tuple(point)
            return
        for e in range(lo[k], hi[k] + 1):
            if total is not None:
                rest = remaining - e
                if rest < suffix_lo[k + 1] or rest > suffix_hi[k + 1]:
                    continue
            point[k] = e
            yield from rec(k + 1, remaining - e if total is not None else remaining)

    yield from rec(0, total)


def ehrhart_points(poly: LatticePolytope, b: int) -> list[tuple[int, ...]]:
    """Lattice points of the b-th dilation, lex sorted.

    Bounding-box scan; membership of a in bP is exact via the lifted cone
    spanned by (v, 1): a in bP iff (a, b) lies in it. The scan space shrinks
    to one coordinate-sum slice when all vertices share a modulus.
    """
    if b < 0:
        raise InvalidInstance("dilation factor must be nonnegative")
    if b == 0:
        return [tuple([0] * poly.n)]
    member = _lifted_membership(poly.vertices)
    lo = [b * min(v[k] for v in poly.vertices) for k in range(poly.n)]
    hi = [b * max(v[k] for v in poly.vertices) for k in range(poly.n)]
    moduli = {sum(v) for v in poly.vertices}
    total = b * moduli.pop() if len(moduli) == 1 else None
    out = []
    for a in _box_points(lo, hi, total):
        if member.contains((*a, b)):
            out.append(a)
    return out


@dataclass(frozen=True)
class DilationCheck:
    b: int
    points: int
    failures: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "points": self.points,
            "failures": [list(a) for a in self.failures],
        }


@dataclass(frozen=True)
class EqualityReport:
    """Does every lattice point of bP decompose into exactly b generators,
    for 1 <= b <= b_max? A semidecision: silence below the bound only."""

    degree: int
    b_max: int
    dilations: tuple[DilationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(not d.failures for d in self.dilations)

    @property
    def first_witness(self):
        for d in self.dilations:
            if d.failures:
                return d.b, d.failures[0]
        return None

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "b_max": self.b_max,
            "dilations": [d.to_json() for d in self.dilations],
            "passed": self.passed,
            "semidecision": f"checked dilations 1..{self.b_max} only",
        }
        w = self.first_witness
        if w is not None:
            out["first_witness"] = {"b": w[0], "point": list(w[1])}
        return out


def ehrhart_equality_check(exponents, b_max: int) -> EqualityReport:
    """Equal-degree generators only: compares bP's lattice points against
    exact sums of b generators for each b up to b_max."""
    vecs = sorted({tuple(int(e) for e in v) for v in exponents})
    if not vecs:
        raise EmptyInput("no generators given")
    if any(e < 0 for v in vecs for e in v):
        raise InvalidInstance("generators must be nonnegative")
    degrees = {sum(v) for v in vecs}
    if len(degrees) > 1:
        first = next(v for v in vecs if sum(v) == min(degrees))
        second = next(v for v in vecs if sum(v) == max(degrees))
        raise UnequalModuli(first, second)
    if b_max < 0:
        raise InvalidInstance("b_max must be nonnegative")
    degree = degrees.pop()
    poly = LatticePolytope(len(vecs[0]), tuple(vecs))
    dilations = []
    for b in range(1, b_max + 1):
        pts = ehrhart_points(poly, b)
        failures = [a for a in pts if not _decompose(a, b, tuple(vecs), exact=True)]
        dilations.append(DilationCheck(b, len(pts), tuple(failures)))
    return EqualityReport(degree, b_max, tuple(dilations))


@dataclass(frozen=True)
class ElementStatus:
    element: tuple[int, ...]
    kind: str  # "unit" | "dilation"
    ok: bool

    def to_json(self) -> dict:
        return {"element": list(self.element), "kind": self.kind, "ok": self.ok}


@dataclass(frozen=True)
class DecompositionReport:
    """Audit that each Hilbert basis element is a unit e_i at height zero or
    lands in the dilated polytope at its height. A failure would refute the
    structural decomposition of a quasi-ideal normalization, so callers
    treat violations as counterexamples."""

    verdict: Verdict
    statuses: tuple[ElementStatus, ...]

    @property
    def holds(self) -> bool:
        return all(s.ok for s in self.statuses)

    @property
    def violations(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s.element for s in self.statuses if not s.ok)

    def to_json(self) -> dict:
        return {
            "classification": self.verdict.value,
            "elements": [s.to_json() for s in self.statuses],
            "holds": self.holds,
            "violations": [list(v) for v in self.violations],
        }


def decomposition_check(ideal: MonomialIdeal, cap: int = DEFAULT_CAP) -> DecompositionReport:
    cone, fs = _ideal_geometry(ideal)
    verdict = classify(fs).verdict
    if verdict is Verdict.NEITHER:
        raise PreconditionFailed("decomposition check needs an ideal or quasi-ideal cone")
    hb = _ideal_hilbert(ideal, cap)
    member = _lifted_membership(ideal.exponents)
    statuses = []
    for h in hb.elements:
        a, b = h[:-1], h[-1]
        if b == 0:
            ok = sum(a) == 1 and all(e in (0, 1) for e in a)
            statuses.append(ElementStatus(h, "unit", ok))
        else:
            statuses.append(ElementStatus(h, "dilation", member.contains(h)))
    return DecompositionReport(verdict, tuple(statuses))


def certify_normality_pipeline(
    ideal: MonomialIdeal, cap: int = DEFAULT_CAP
) -> NormalityCertificate:
    """Two-route certification.

    Always runs the direct Hilbert route. When the cone classifies as ideal
    or quasi-ideal and the generators share one degree, also runs the
    equality route: dilation equality up to the largest Hilbert height plus
    the decomposition audit certifies the same verdict, and any disagreement
    between the routes is a hard MethodDisagreement. Method is "both" when
    the second route ran.
    """
    direct = is_normal(ideal, cap)
    if ideal.q == 1:
        return direct
    cone, fs = _ideal_geometry(ideal)
    verdict = classify(fs).verdict
    equigenerated = len({sum(v) for v in ideal.exponents}) == 1
    if verdict is Verdict.NEITHER or not equigenerated:
        return direct
    hb = _ideal_hilbert(ideal, cap)
    b_max = max(h[-1] for h in hb.elements)
    equality = ehrhart_equality_check(ideal.exponents, b_max)
    decomposition = decomposition_check(ideal, cap)
    quasi_verdict = "normal" if equality.passed and decomposition.holds else "not_normal"
    if quasi_verdict != direct.verdict:
        raise MethodDisagreement(
            f"hilbert route says {direct.verdict}, equality route says {quasi_verdict} "
            f"on {ideal.to_json()}"
        )
    return NormalityCertificate(direct.verdict, direct.witness, "both")
