"""Exact integer linear algebra on small dense matrices.

Everything here runs on arbitrary-precision Python ints (rationals only as
exact Fractions in back-substitution). No floating point anywhere: results
feed normality certificates, so approximation is not an option.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import ZeroVector


class IntVec(tuple):
    """Integer vector with at least one coordinate. Plain tuple underneath."""

    def __new__(cls, entries):
        vec = super().__new__(cls, tuple(int(e) for e in entries))
        if not vec:
            raise ValueError("a vector needs at least one entry")
        return vec

    @property
    def dim(self) -> int:
        return len(self)


class IntMat(tuple):
    """Matrix stored as a tuple of IntVec rows of equal dimension."""

    def __new__(cls, rows):
        mat = super().__new__(cls, tuple(IntVec(r) for r in rows))
        dims = {r.dim for r in mat}
        if len(dims) > 1:
            raise ValueError(f"rows of mixed dimension: {sorted(dims)}")
        return mat

    @property
    def nrows(self) -> int:
        return len(self)

    @property
    def ncols(self) -> int:
        return self[0].dim if self else 0


def dot(u, v):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def primitive(v) -> IntVec:
    """Divide a nonzero integer vector by the gcd of its entries.

    Signs are preserved; only the common positive factor is removed, so the
    result generates the same ray.
    """
    vec = IntVec(v)
    g = 0
    for e in vec:
        g = gcd(g, e)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive form")
    if g == 1:
        return vec
    return IntVec(e // g for e in vec)


def _bareiss(rows):
    """Fraction-free forward elimination.

    Returns (echelon matrix, pivot column list, permutation sign). Every
    intermediate entry is a minor of the input, so the interleaved exact
    divisions never truncate.
    """
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return m, [], 1
    nr, nc = len(m), len(m[0])
    pivots = []
    sign = 1
    prev = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        p = m[r][c]
        for i in range(r + 1, nr):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, nc):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return m, pivots, sign


def rank(rows) -> int:
    _, pivots, _ = _bareiss(list(rows))
    return len(pivots)


def pivot_columns(rows) -> tuple[int, ...]:
    """Column indices of the leading pivots; the submatrix on them has full rank."""
    _, pivots, _ = _bareiss(list(rows))
    return tuple(pivots)


def determinant(rows) -> int:
    m = [tuple(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if len(m[0]) != n:
        raise ValueError("determinant of a non-square matrix")
    ech, pivots, sign = _bareiss(m)
    if len(pivots) < n:
        return 0
    return sign * ech[n - 1][n - 1]


def adjugate(rows):
    """Adjugate and determinant of a square matrix: M @ adj == det * I.

    Cofactor expansion; fine for the tiny systems this package solves.
    """
    m = [tuple(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("adjugate of a non-square matrix")
    if n == 0:
        return [], 1
    if n == 1:
        return [[1]], m[0][0]
    adj = [[0] * n for _ in range(n)]
    det = 0
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = ((-1) ** (i + j)) * determinant(minor)
            adj[j][i] = cof
            if j == 0:
                det += m[i][0] * cof
    return adj, det


def is_totally_unimodular(rows) -> bool:
    """True iff every square minor lies in {-1, 0, 1}.

    Direct enumeration of all minors, smallest order first, with early exit
    on the first bad one. Exponential by design; intended for desk-scale
    generator matrices.
    """
    mat = [tuple(map(int, r)) for r in rows]
    if not mat:
        return True
    nr, nc = len(mat), len(mat[0])
    for row in mat:
        for e in row:
            if e not in (-1, 0, 1):
                return False
    for k in range(2, min(nr, nc) + 1):
        for rset in combinations(range(nr), k):
            for cset in combinations(range(nc), k):
                sub = [[mat[i][j] for j in cset] for i in rset]
                if determinant(sub) not in (-1, 0, 1):
                    return False
    return True


def kernel_basis(rows) -> list[IntVec]:
    """Primitive integer basis of the right kernel {x : M x = 0}.

    Gauss-Jordan over exact rationals, one basis vector per free column,
    denominators cleared at the end. Deterministic: free columns ascending.
    """
    m = [[Fraction(int(e)) for e in r] for r in rows]
    if not m:
        return []
    nr, nc = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        sol = [Fraction(0)] * nc
        sol[fc] = Fraction(1)
        for rr, pc in enumerate(pivots):
            sol[pc] = -m[rr][fc]
        denom = 1
        for e in sol:
            denom = denom * e.denominator // gcd(denom, e.denominator)
        basis.append(primitive(int(e * denom) for e in sol))
    return basis
