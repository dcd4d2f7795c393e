"""Rees cones and their unique irreducible facet descriptions.

The Rees cone of a monomial ideal with exponent vectors v_1..v_q in N^n is
the cone in R^(n+1) spanned by the coordinate units e_1..e_n together with
the lifted generators (v_i, 1). It always has full dimension n+1, is pointed,
and its irreducible inner description splits into unit normals e_i and
integer normals with nonnegative leading entries and negative last entry.

Facet enumeration runs an incremental double description pass on the dual
cone (extreme rays of {y : <g, y> >= 0}), seeded from a simplicial subcone
of n+1 independent generators, with the rank-based tightness test pruning
non-adjacent ray pairs. A brute-force oracle over generator subsets provides
an independent cross-check for small instances. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import gcd

from .errors import CapExceeded, DegenerateCone, IntegrityError
from .exactlat import adjugate, determinant, dot, kernel_basis, pivot_columns, primitive, rank
from .matroid import Matroid, MonomialIdeal, basis_monomial_ideal

ORACLE_CAP = 12


def _unit(i: int, dim: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(dim))


def _unit_index(v) -> int | None:
    """1-based index when v is a coordinate unit vector, else None."""
    hits = [k for k, e in enumerate(v) if e]
    if len(hits) == 1 and v[hits[0]] == 1:
        return hits[0] + 1
    return None


@dataclass(frozen=True)
class ReesCone:
    """Generators of a Rees cone: units first, then lifted exponent vectors.

    Generators live in dimension n+1 with last coordinate 0 (unit part) or
    1 (lifted part) and nonnegative entries, so the cone sits in the first
    orthant and is automatically pointed. Spanning the full dimension is
    NOT enforced here; facet enumeration raises DegenerateCone when it
    fails, which makes deliberately flat cones constructible in tests.
    """

    n: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DegenerateCone("ambient dimension must be at least 2")
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        for g in gens:
            if len(g) != self.n + 1:
                raise DegenerateCone(f"generator {g} not of dimension {self.n + 1}")
            if any(e < 0 for e in g):
                raise DegenerateCone(f"generator {g} leaves the first orthant")
            if not any(g):
                raise DegenerateCone("the zero vector is not a generator")
            if g[-1] not in (0, 1):
                raise DegenerateCone(f"generator {g} has last coordinate outside {{0,1}}")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return self.n + 1

    def lifted(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g for g in self.generators if g[-1] == 1)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}


def rees_generators(ideal: MonomialIdeal) -> ReesCone:
    """e_1..e_n followed by (v, 1) for each exponent vector v, in lex order."""
    units = [_unit(i, ideal.n + 1) for i in range(ideal.n)]
    lifted = [(*v, 1) for v in ideal.exponents]
    return ReesCone(ideal.n, tuple(units + lifted))


def basis_rees_cone(m: Matroid) -> ReesCone:
    return rees_generators(basis_monomial_ideal(m))


class Verdict(str, Enum):
    IDEAL = "ideal"
    QUASI_IDEAL = "quasi_ideal"
    NEITHER = "neither"


@dataclass(frozen=True)
class FacetSystem:
    """Irreducible inner description of a full-dimensional Rees-type cone.

    unit_normals: ascending 1-based indices i with e_i a facet normal.
    ell_normals: lex-sorted primitive normals with nonnegative leading
    entries and last entry <= -1.
    """

    dim: int
    unit_normals: tuple[int, ...]
    ell_normals: tuple[tuple[int, ...], ...]

    def normals(self) -> tuple[tuple[int, ...], ...]:
        units = tuple(_unit(i - 1, self.dim) for i in self.unit_normals)
        return units + self.ell_normals

    def contains(self, point) -> bool:
        if len(point) != self.dim:
            raise ValueError(f"point of dimension {len(point)}, cone of {self.dim}")
        for i in self.unit_normals:
            if point[i - 1] < 0:
                return False
        return all(dot(b, point) >= 0 for b in self.ell_normals)

    def to_json(self) -> dict:
        return {
            "unit_normals": list(self.unit_normals),
            "ell_normals": [list(b) for b in self.ell_normals],
        }


@dataclass(frozen=True)
class ConeClassification:
    verdict: Verdict
    offending_normal: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.offending_normal is not None:
            out["offending_normal"] = list(self.offending_normal)
        return out


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _dual_extreme_rays(ineqs, dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of {y in R^dim : <a, y> >= 0 for every row a}.

    The rows must span R^dim (the cone is then pointed); otherwise
    DegenerateCone. Incremental double description: seed on dim independent
    rows, whose dual simplicial cone has the adjugate columns as rays, then
    cut with the remaining rows one at a time. A candidate pair contributes
    a new ray only when the rows tight at both have rank dim-2, the exact
    adjacency criterion.
    """
    rows = []
    seen = set()
    for a in ineqs:
        t = tuple(int(x) for x in a)
        if t in seen:
            continue
        seen.add(t)
        rows.append(t)

    seed = []
    for idx, a in enumerate(rows):
        if rank([rows[i] for i in seed] + [a]) > len(seed):
            seed.append(idx)
            if len(seed) == dim:
                break
    if len(seed) < dim:
        raise DegenerateCone(f"rows span rank {len(seed)} < {dim}")

    adj, det = adjugate([rows[i] for i in seed])
    sgn = 1 if det > 0 else -1
    rays = [tuple(primitive(sgn * adj[i][j] for i in range(dim))) for j in range(dim)]
    # seed ray j is tight on every seed row but its own
    masks = [((1 << dim) - 1) ^ (1 << j) for j in range(dim)]
    processed = [rows[i] for i in seed]

    for idx, a in enumerate(rows):
        if idx in seed:
            continue
        k = len(processed)
        vals = [dot(a, r) for r in rays]
        if min(vals) >= 0:
            masks = [mk | (1 << k) if vals[t] == 0 else mk for t, mk in enumerate(masks)]
            processed.append(a)
            continue
        pos = [t for t, v in enumerate(vals) if v > 0]
        neg = [t for t, v in enumerate(vals) if v < 0]
        new_rays, new_masks = [], []
        for t, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[t])
                new_masks.append(masks[t])
            elif v == 0:
                new_rays.append(rays[t])
                new_masks.append(masks[t] | (1 << k))
        for p in pos:
            for q in neg:
                common = masks[p] & masks[q]
                if rank([processed[i] for i in _bits(common)]) != dim - 2:
                    continue
                # positive combination vals[p]*ray_q - vals[q]*ray_p lands on <a,.>=0
                w = tuple(
                    primitive(
                        vals[p] * rays[q][i] - vals[q] * rays[p][i] for i in range(dim)
                    )
                )
                new_rays.append(w)
                new_masks.append(common | (1 << k))
        rays, masks = new_rays, new_masks
        processed.append(a)
    return sorted(set(rays))


def _facet_system(dim: int, normals, generators) -> FacetSystem:
    units, ells = [], []
    for b in normals:
        g_acc = 0
        for e in b:
            g_acc = gcd(g_acc, e)
        if g_acc != 1:
            raise IntegrityError(f"normal {b} is not primitive")
        tight = [g for g in generators if dot(b, g) == 0]
        if any(dot(b, g) < 0 for g in generators):
            raise IntegrityError(f"normal {b} cuts off a generator")
        if rank(tight) != dim - 1:
            raise IntegrityError(f"normal {b} is not tight on a rank-{dim - 1} subset")
        u = _unit_index(b)
        if u is not None:
            units.append(u)
        elif any(e < 0 for e in b[:-1]) or b[-1] > -1:
            raise IntegrityError(f"normal {b} breaks the sign pattern of a lifted cone")
        else:
            ells.append(tuple(b))
    return FacetSystem(dim, tuple(sorted(units)), tuple(sorted(ells)))


@lru_cache(maxsize=None)
def _facet_normals_cached(generators: tuple, dim: int) -> FacetSystem:
    normals = _dual_extreme_rays(generators, dim)
    return _facet_system(dim, normals, generators)


def facet_normals(cone: ReesCone) -> FacetSystem:
    """Irreducible facet description via double description; DegenerateCone
    when the generators span less than the full dimension."""
    return _facet_normals_cached(cone.generators, cone.dim)


def facet_normals_oracle(cone: ReesCone, cap: int = ORACLE_CAP) -> FacetSystem:
    """Brute-force facet enumeration, independent of the incremental engine.

    Every subset of dim-1 generators of full rank spans a candidate
    hyperplane; its primitive normal is kept iff one orientation puts the
    whole generator set on the nonnegative side. Exponential in the
    generator count, hence the cap.
    """
    gens = []
    seen = set()
    for g in cone.generators:
        if g not in seen:
            seen.add(g)
            gens.append(g)
    if len(gens) > cap:
        raise CapExceeded(f"{len(gens)} generators exceed the oracle cap {cap}")
    dim = cone.dim
    if rank(gens) < dim:
        raise DegenerateCone(f"generators span rank {rank(gens)} < {dim}")
    normals = set()
    for combo in combinations(gens, dim - 1):
        w = []
        sign = 1
        for k in range(dim):
            minor = [[g[i] for i in range(dim) if i != k] for g in combo]
            w.append(sign * determinant(minor))
            sign = -sign
        if not any(w):
            continue
        w = tuple(primitive(w))
        values = [dot(w, g) for g in gens]
        if any(v > 0 for v in values) and any(v < 0 for v in values):
            continue
        if all(v <= 0 for v in values):
            w = tuple(-e for e in w)
        normals.add(w)
    return _facet_system(dim, sorted(normals), tuple(gens))


def classify(fs: FacetSystem) -> ConeClassification:
    """Quasi-ideal iff every non-unit normal has 0/1 leading entries; ideal
    iff additionally each has last entry exactly -1. First offender in lex
    order is reported."""
    for b in fs.ell_normals:
        if any(e not in (0, 1) for e in b[:-1]):
            return ConeClassification(Verdict.NEITHER, b)
    if all(b[-1] == -1 for b in fs.ell_normals):
        return ConeClassification(Verdict.IDEAL)
    return ConeClassification(Verdict.QUASI_IDEAL)


@dataclass(frozen=True)
class ShapeReport:
    """Facet shape audit for a matroid basis Rees cone.

    Expected shape: units, plus 0/1-leading normals with last entry in
    [-d, -1]. Anything else lands in violations. notes records oddities
    that are not violations, like coordinate units missing from the facet
    list (which happens for n = 1).
    """

    n: int
    d: int
    facets: FacetSystem
    violations: tuple[tuple[int, ...], ...]
    notes: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "facets": self.facets.to_json(),
            "violations": [list(v) for v in self.violations],
            "notes": list(self.notes),
            "holds": self.holds,
        }


def verify_basis_facet_shape(m: Matroid) -> ShapeReport:
    fs = facet_normals(basis_rees_cone(m))
    violations = []
    for b in fs.ell_normals:
        if any(e not in (0, 1) for e in b[:-1]) or not (-m.d <= b[-1] <= -1):
            violations.append(b)
    notes = []
    missing = [i for i in range(1, m.n + 2) if i not in fs.unit_normals]
    if missing:
        notes.append(
            "coordinate units absent from the facet list: "
            + ", ".join(f"e_{i}" for i in missing)
        )
    return ShapeReport(m.n, m.d, fs, tuple(violations), tuple(notes))


def rank_one_facets(n: int) -> FacetSystem:
    """Closed-form facets for the rank-one uniform basis cone on n elements.

    For n >= 2: all units plus (1,..,1,-1). For n = 1 the cone is spanned by
    (1,0) and (1,1), and e_1 is implied by the other two inequalities, so the
    description is {e_2, (1,-1)}. Cross-checked against the generic engine.
    """
    if n < 1:
        raise DegenerateCone("need n >= 1")
    if n == 1:
        expected = FacetSystem(2, (2,), ((1, -1),))
    else:
        expected = FacetSystem(
            n + 1,
            tuple(range(1, n + 2)),
            (tuple([1] * n + [-1]),),
        )
    m = Matroid(n, 1, tuple((i,) for i in range(1, n + 1)))
    computed = facet_normals(basis_rees_cone(m))
    if computed != expected:
        raise IntegrityError(
            f"closed-form facets {expected} disagree with the engine {computed}"
        )
    return expected


def extreme_generators(cone: ReesCone, fs: FacetSystem | None = None):
    """Primitive generators lying on a rank-(dim-1) set of facets."""
    fs = fs or facet_normals(cone)
    normals = fs.normals()
    out = []
    seen = set()
    for g in cone.generators:
        p = tuple(primitive(g))
        if p in seen:
            continue
        seen.add(p)
        tight = [b for b in normals if dot(b, p) == 0]
        if rank(tight) == cone.dim - 1:
            out.append(p)
    return tuple(out)


def facet_tight_sets(generators) -> list[tuple]:
    """Tight generator subsets of each codimension-one face, within the span.

    Works for generator sets of any rank: membership and faces are computed
    after projecting to a pivot coordinate set on which the span projects
    isomorphically.
    """
    gens = []
    seen = set()
    for g in generators:
        t = tuple(int(e) for e in g)
        if t not in seen:
            seen.add(t)
            gens.append(t)
    r = rank(gens)
    pivots = pivot_columns(gens)
    proj = [tuple(g[c] for c in pivots) for g in gens]
    normals = _dual_extreme_rays(proj, r)
    out = []
    for w in normals:
        tight = tuple(g for g, pg in zip(gens, proj) if dot(w, pg) == 0)
        out.append(tight)
    return out


class ConeMembership:
    """Exact membership oracle for cone(generators), full-dimensional or not.

    Equations cut out the linear span; facet inequalities are computed on a
    pivot projection of the span. Built once, then reused for many points.
    """

    def __init__(self, generators):
        gens = []
        seen = set()
        for g in generators:
            t = tuple(int(e) for e in g)
            if t not in seen:
                seen.add(t)
                gens.append(t)
        if not gens:
            raise DegenerateCone("no generators")
        self.dim = len(gens[0])
        r = rank(gens)
        if r == self.dim:
            self._equations: tuple = ()
            self._pivots = tuple(range(self.dim))
            self._normals = tuple(_dual_extreme_rays(gens, self.dim))
        else:
            self._equations = tuple(tuple(u) for u in kernel_basis(gens))
            self._pivots = pivot_columns(gens)
            proj = [tuple(g[c] for c in self._pivots) for g in gens]
            self._normals = tuple(_dual_extreme_rays(proj, r))

    def contains(self, point) -> bool:
        if len(point) != self.dim:
            raise ValueError(f"point of dimension {len(point)}, cone of {self.dim}")
        if any(dot(u, point) != 0 for u in self._equations):
            return False
        restricted = tuple(point[c] for c in self._pivots)
        return all(dot(w, restricted) >= 0 for w in self._normals)
