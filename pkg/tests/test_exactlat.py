from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reeskit.errors import ZeroVector
from reeskit.exactlat import (
    adjugate,
    determinant,
    dot,
    is_totally_unimodular,
    kernel_basis,
    primitive,
    rank,
    vsub,
)


def det_oracle(rows):
    """Permutation expansion. Exponential, fine below 6x6."""
    m = len(rows)
    total = 0
    for perm in itertools.permutations(range(m)):
        sign = 1
        seen = list(perm)
        for i in range(m):
            for j in range(i + 1, m):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(m):
            term *= rows[i][perm[i]]
        total += term
    return total


def rank_oracle(rows):
    """Largest k with a nonzero k x k minor."""
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    for k in range(min(nrows, ncols), 0, -1):
        for rsel in itertools.combinations(range(nrows), k):
            for csel in itertools.combinations(range(ncols), k):
                minor = [[rows[r][c] for c in csel] for r in rsel]
                if det_oracle(minor) != 0:
                    return k
    return 0


small_entry = st.integers(min_value=-6, max_value=6)


def matrices(max_dim: int = 4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_entry, min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )


def square_matrices(max_dim: int = 4):
    return st.integers(1, max_dim).flatmap(
        lambda k: st.lists(
            st.lists(small_entry, min_size=k, max_size=k),
            min_size=k,
            max_size=k,
        )
    )


class TestPrimitive:
    def test_examples(self):
        assert primitive((2, 4, -6)) == (1, 2, -3)
        assert primitive((0, 0, 5)) == (0, 0, 1)
        assert primitive((-3,)) == (-1,)
        assert primitive((7, 11)) == (7, 11)

    def test_zero_rejected(self):
        with pytest.raises(ZeroVector):
            primitive((0, 0, 0))

    @given(st.lists(small_entry, min_size=1, max_size=5), st.integers(1, 9))
    def test_scaling_invariant(self, v, c):
        if not any(v):
            return
        assert primitive(tuple(c * x for x in v)) == primitive(tuple(v))

    @given(st.lists(small_entry, min_size=1, max_size=5))
    def test_idempotent(self, v):
        if not any(v):
            return
        p = primitive(tuple(v))
        assert primitive(p) == p


class TestDeterminant:
    def test_known(self):
        assert determinant(((2, 0), (0, 3))) == 6
        assert determinant(((0, 1), (1, 0))) == -1
        assert determinant(((1, 2, 3), (4, 5, 6), (7, 8, 10))) == -3
        assert determinant(()) == 1

    @settings(max_examples=150)
    @given(square_matrices())
    def test_matches_permutation_expansion(self, rows):
        assert determinant(tuple(map(tuple, rows))) == det_oracle(rows)

    @settings(max_examples=60)
    @given(square_matrices(3))
    def test_row_swap_flips_sign(self, rows):
        if len(rows) < 2:
            return
        swapped = [rows[1], rows[0]] + rows[2:]
        assert determinant(tuple(map(tuple, swapped))) == -determinant(
            tuple(map(tuple, rows))
        )


class TestRank:
    def test_examples(self):
        assert rank(((1, 0), (0, 1))) == 2
        assert rank(((1, 2), (2, 4))) == 1
        assert rank(((0, 0), (0, 0))) == 0
        assert rank(()) == 0

    @settings(max_examples=150)
    @given(matrices())
    def test_matches_minor_oracle(self, rows):
        assert rank(tuple(map(tuple, rows))) == rank_oracle(rows)


class TestAdjugate:
    @settings(max_examples=100)
    @given(square_matrices())
    def test_product_is_det_times_identity(self, rows):
        k = len(rows)
        adj, det = adjugate(tuple(map(tuple, rows)))
        for i in range(k):
            for j in range(k):
                entry = sum(rows[i][t] * adj[t][j] for t in range(k))
                assert entry == (det if i == j else 0)

    def test_identity(self):
        adj, det = adjugate(((1, 0), (0, 1)))
        assert det == 1
        assert [list(r) for r in adj] == [[1, 0], [0, 1]]


class TestKernel:
    def test_examples(self):
        # x + y + z = 0 has a rank-2 kernel
        basis = kernel_basis(((1, 1, 1),))
        assert len(basis) == 2
        assert list(kernel_basis(((1, 0), (0, 1)))) == []

    @settings(max_examples=100)
    @given(matrices())
    def test_basis_spans_and_annihilates(self, rows):
        mat = tuple(map(tuple, rows))
        basis = kernel_basis(mat)
        ncols = len(rows[0])
        assert len(basis) == ncols - rank(mat)
        for b in basis:
            for row in rows:
                assert dot(tuple(row), b) == 0
        if basis:
            assert rank(basis) == len(basis)


class TestTotallyUnimodular:
    def test_positive_examples(self):
        # interval matrix: consecutive ones in each row
        assert is_totally_unimodular(((1, 1, 0), (0, 1, 1), (0, 0, 1)))
        # network-style columns e1, e2, e1+e3, e2+e3
        assert is_totally_unimodular(
            ((1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1))
        )

    def test_negative_examples(self):
        assert not is_totally_unimodular(((2,),))
        assert not is_totally_unimodular(((1, 1), (-1, 1)))  # det 2
        # odd cycle vertex-edge incidence
        assert not is_totally_unimodular(((1, 0, 1), (1, 1, 0), (0, 1, 1)))

    @settings(max_examples=60)
    @given(matrices(3))
    def test_invariant_under_transpose(self, rows):
        mat = tuple(map(tuple, rows))
        transposed = tuple(zip(*rows))
        assert is_totally_unimodular(mat) == is_totally_unimodular(transposed)

    @settings(max_examples=60)
    @given(matrices(3), st.randoms(use_true_random=False))
    def test_invariant_under_row_permutation(self, rows, rng):
        mat = tuple(map(tuple, rows))
        shuffled = list(rows)
        rng.shuffle(shuffled)
        assert is_totally_unimodular(mat) == is_totally_unimodular(
            tuple(map(tuple, shuffled))
        )


def test_dot_and_vsub():
    assert dot((1, 2, 3), (4, 5, 6)) == 32
    assert vsub((4, 5, 6), (1, 2, 3)) == (3, 3, 3)
