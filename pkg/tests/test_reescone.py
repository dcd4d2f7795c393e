from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reeskit.errors import CapExceeded, DegenerateCone
from reeskit.exactlat import dot, kernel_basis, rank
from reeskit.matroid import (
    MonomialIdeal,
    basis_monomial_ideal,
    enumerate_matroids,
    graphic_matroid,
    uniform_matroid,
)
from reeskit.reescone import (
    ConeMembership,
    FacetSystem,
    ReesCone,
    Verdict,
    basis_rees_cone,
    classify,
    extreme_generators,
    facet_normals,
    facet_normals_oracle,
    facet_tight_sets,
    rank_one_facets,
    rees_generators,
    verify_basis_facet_shape,
)

# frozen from the subset-minor oracle run before the incremental engine
# was trusted; see the module tests below that re-derive them
PRINCIPAL = MonomialIdeal(1, ((1,),))
TWO_SQUARES = MonomialIdeal(2, ((2, 0), (0, 2)))
MIXED = MonomialIdeal(2, ((3, 0), (1, 1), (0, 3)))


def random_ideal(rng: random.Random) -> MonomialIdeal:
    n = rng.randint(1, 4)
    q = min(rng.randint(1, 6), 5 ** n - 1)
    vecs = set()
    while len(vecs) < q:
        v = tuple(rng.randint(0, 4) for _ in range(n))
        if any(v):
            vecs.add(v)
    return MonomialIdeal(n, tuple(sorted(vecs)))


class TestFrozenFacetSystems:
    def test_principal_n1(self):
        fs = facet_normals(rees_generators(PRINCIPAL))
        assert fs.unit_normals == (2,)
        assert fs.ell_normals == ((1, -1),)

    def test_two_squares(self):
        fs = facet_normals(rees_generators(TWO_SQUARES))
        assert fs.unit_normals == (1, 2, 3)
        assert fs.ell_normals == ((1, 1, -2),)

    def test_mixed(self):
        fs = facet_normals(rees_generators(MIXED))
        assert fs.unit_normals == (1, 2, 3)
        assert fs.ell_normals == ((1, 2, -3), (2, 1, -3))

    def test_u12_basis_cone(self):
        fs = facet_normals(basis_rees_cone(uniform_matroid(2, 1)))
        assert fs.unit_normals == (1, 2, 3)
        assert fs.ell_normals == ((1, 1, -1),)

    def test_u23_basis_cone(self):
        fs = facet_normals(basis_rees_cone(uniform_matroid(3, 2)))
        assert fs.unit_normals == (1, 2, 3, 4)
        assert fs.ell_normals == (
            (0, 1, 1, -1),
            (1, 0, 1, -1),
            (1, 1, 0, -1),
            (1, 1, 1, -2),
        )


class TestOracleAgreement:
    def test_named_examples(self):
        for ideal in (PRINCIPAL, TWO_SQUARES, MIXED):
            cone = rees_generators(ideal)
            assert facet_normals(cone) == facet_normals_oracle(cone)

    def test_basis_cones_n4(self):
        for n in range(1, 5):
            for d in range(1, n + 1):
                for m in enumerate_matroids(n, d):
                    cone = basis_rees_cone(m)
                    assert facet_normals(cone) == facet_normals_oracle(cone), m

    def test_random_ideals(self):
        rng = random.Random(0xC0FFEE)
        for _ in range(60):
            ideal = random_ideal(rng)
            cone = rees_generators(ideal)
            assert facet_normals(cone) == facet_normals_oracle(cone), ideal

    def test_oracle_cap(self):
        k4 = graphic_matroid(4, tuple(combinations(range(1, 5), 2)))
        cone = basis_rees_cone(k4)  # 22 generators
        with pytest.raises(CapExceeded):
            facet_normals_oracle(cone)


class TestFacetSystemProperties:
    def test_normals_are_valid_and_tight(self):
        # each normal is nonnegative on all generators and tight on a
        # spanning-but-one subset; checked through public data only
        rng = random.Random(7)
        for _ in range(25):
            ideal = random_ideal(rng)
            cone = rees_generators(ideal)
            fs = facet_normals(cone)
            for g in fs.normals():
                vals = [dot(g, v) for v in cone.generators]
                assert all(x >= 0 for x in vals)
                tight = tuple(
                    v for v, x in zip(cone.generators, vals) if x == 0
                )
                assert rank(tight) == cone.dim - 1

    def test_irredundant(self):
        # dropping any single normal admits a ray that the dropped one cuts
        for ideal in (PRINCIPAL, TWO_SQUARES, MIXED):
            cone = rees_generators(ideal)
            fs = facet_normals(cone)
            normals = fs.normals()
            for g in normals:
                others = tuple(h for h in normals if h != g)
                assert _relaxation_escapes(others, g, cone.dim), (ideal, g)

    def test_contains(self):
        fs = facet_normals(rees_generators(TWO_SQUARES))
        assert fs.contains((2, 0, 1))
        assert fs.contains((1, 1, 1))  # cone point, not semigroup point
        assert not fs.contains((1, 0, 1))
        assert not fs.contains((-1, 0, 0))

    def test_json_shape(self):
        doc = facet_normals(rees_generators(TWO_SQUARES)).to_json()
        assert doc == {
            "unit_normals": [1, 2, 3],
            "ell_normals": [[1, 1, -2]],
        }


def _relaxation_escapes(normals, dropped, dim: int) -> bool:
    """True when the cone cut by `normals` has a ray with <dropped, ray> < 0.

    Brute candidate rays: kernels of (dim-1)-subsets, both orientations.
    """
    for rows in combinations(normals, dim - 1):
        if rank(rows) != dim - 1:
            continue
        for base in kernel_basis(rows):
            for ray in (base, tuple(-x for x in base)):
                if all(dot(h, ray) >= 0 for h in normals) and dot(dropped, ray) < 0:
                    return True
    return False


class TestClassify:
    def test_three_verdicts(self):
        assert classify(facet_normals(rees_generators(PRINCIPAL))).verdict is Verdict.IDEAL
        got = classify(facet_normals(rees_generators(TWO_SQUARES)))
        assert got.verdict is Verdict.QUASI_IDEAL
        assert got.offending_normal is None
        got = classify(facet_normals(rees_generators(MIXED)))
        assert got.verdict is Verdict.NEITHER
        assert got.offending_normal == (1, 2, -3)

    def test_json(self):
        doc = classify(facet_normals(rees_generators(MIXED))).to_json()
        assert doc == {"verdict": "neither", "offending_normal": [1, 2, -3]}

    def test_verdict_values(self):
        assert Verdict.IDEAL.value == "ideal"
        assert Verdict.QUASI_IDEAL.value == "quasi_ideal"
        assert Verdict.NEITHER.value == "neither"


class TestRankOne:
    def test_n1_special_case(self):
        fs = rank_one_facets(1)
        assert fs.unit_normals == (2,)
        assert fs.ell_normals == ((1, -1),)

    def test_closed_form_matches_engine(self):
        for n in range(2, 7):
            fs = rank_one_facets(n)
            assert fs.unit_normals == tuple(range(1, n + 2))
            assert fs.ell_normals == ((1,) * n + (-1,),)
            # engine on the one-basis-per-singleton matroid agrees
            m = uniform_matroid(n, 1)
            assert facet_normals(basis_rees_cone(m)) == fs


class TestShapeReport:
    def test_holds_on_small_corpus(self):
        for n in range(1, 5):
            for d in range(1, n + 1):
                for m in enumerate_matroids(n, d):
                    rep = verify_basis_facet_shape(m)
                    assert rep.holds, (m, rep.to_json())
                    assert rep.violations == ()

    def test_json(self):
        rep = verify_basis_facet_shape(uniform_matroid(2, 1))
        doc = rep.to_json()
        assert doc["holds"] is True
        assert doc["n"] == 2 and doc["d"] == 1


class TestExtremeGenerators:
    def test_roundtrip(self):
        rng = random.Random(99)
        for _ in range(20):
            ideal = random_ideal(rng)
            cone = rees_generators(ideal)
            fs = facet_normals(cone)
            ext = extreme_generators(cone, fs)
            assert set(ext) <= set(cone.generators)
            rebuilt = ReesCone(cone.n, tuple(sorted(ext)))
            assert facet_normals(rebuilt) == fs


class TestReesConeValidation:
    def test_generator_shape(self):
        with pytest.raises(DegenerateCone):
            ReesCone(2, ((1, 0),))  # wrong dimension
        with pytest.raises(DegenerateCone):
            ReesCone(1, ((1, 2),))  # last coordinate must be 0 or 1
        with pytest.raises(DegenerateCone):
            ReesCone(1, ((-1, 0),))

    def test_degenerate(self):
        cone = ReesCone(1, ((1, 0),))
        with pytest.raises(DegenerateCone):
            facet_normals(cone)
        with pytest.raises(DegenerateCone):
            facet_normals_oracle(cone)

    def test_lifted(self):
        cone = rees_generators(TWO_SQUARES)
        assert cone.lifted() == ((0, 2, 1), (2, 0, 1))


class TestConeMembership:
    def test_full_dimensional(self):
        member = ConeMembership(((1, 0), (1, 1)))
        assert member.contains((2, 1))
        assert member.contains((1, 0))
        assert not member.contains((0, 1))
        assert not member.contains((-1, 0))

    def test_lower_dimensional(self):
        member = ConeMembership(((1, 1),))
        assert member.contains((3, 3))
        assert member.contains((0, 0))
        assert not member.contains((1, 2))
        assert not member.contains((-1, -1))

    def test_plane_in_space(self):
        member = ConeMembership(((1, 0, 0), (0, 1, 0)))
        assert member.contains((2, 3, 0))
        assert not member.contains((2, 3, 1))
        assert not member.contains((-1, 0, 0))


def test_facet_tight_sets_square_cone():
    gens = ((1, 0), (0, 1))
    tights = facet_tight_sets(gens)
    assert sorted(tights) == [((0, 1),), ((1, 0),)]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_facets_are_permutation_equivariant(data):
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    ideal = random_ideal(rng)
    n = ideal.n
    perm = data.draw(st.permutations(range(n)))
    moved = MonomialIdeal(
        n, tuple(sorted(tuple(v[perm[i]] for i in range(n)) for v in ideal.exponents))
    )
    fs = facet_normals(rees_generators(ideal))
    fs_moved = facet_normals(rees_generators(moved))

    def push(normal):
        # inverse image: entry i of the moved normal reads coordinate perm[i]
        return tuple(normal[perm[i]] for i in range(n)) + (normal[n],)

    expected_ell = tuple(sorted(push(g) for g in fs.ell_normals))
    inv = {perm[i] + 1: i + 1 for i in range(n)}
    expected_units = tuple(
        sorted(inv.get(i, n + 1) for i in fs.unit_normals)
    )
    assert fs_moved.ell_normals == expected_ell
    assert fs_moved.unit_normals == expected_units
