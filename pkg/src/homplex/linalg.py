"""Exact integer and rational linear algebra.

Everything here works over Python's arbitrary-precision ints and
fractions.Fraction; there is no floating point.  Matrices are plain
row-major lists of lists.  This module supplies the primitives shared by
the geometric and homological layers: Smith normal form, rational
kernels, minimal affine dependencies (circuits), and a tiny exact LP for
convex-position questions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


def matrix_shape(mat) -> tuple[int, int]:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if any(len(row) != cols for row in mat):
        raise ValueError("ragged matrix")
    return rows, cols


def smith_normal_form(mat) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Only the nonzero invariant factors are returned, so the length of the
    result equals the rank.  Elimination picks the minimal-absolute-value
    pivot, which keeps intermediate entries tame at the sizes we handle.
    """
    rows, cols = matrix_shape(mat)
    a = [list(row) for row in mat]
    factors = []
    t = 0
    while t < rows and t < cols:
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (piv is None or abs(v) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
                    if abs(v) == 1:
                        break
            if piv is not None and abs(a[piv[0]][piv[1]]) == 1:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
        while True:
            p = a[t][t]
            swapped = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        arow, trow = a[i], a[t]
                        for j in range(t, cols):
                            arow[j] -= q * trow[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        swapped = True
                        break
            if swapped:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, rows):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for i in range(t, rows):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        swapped = True
                        break
            if swapped:
                continue
            # pivot must divide the remaining submatrix for the chain
            p = a[t][t]
            bad = None
            for i in range(t + 1, rows):
                if any(a[i][j] % p for j in range(t + 1, cols)):
                    bad = i
                    break
            if bad is None:
                break
            brow, trow = a[bad], a[t]
            for j in range(t, cols):
                trow[j] += brow[j]
        factors.append(abs(a[t][t]))
        t += 1
    for d, e in zip(factors, factors[1:]):
        assert e % d == 0
    return factors


def integer_rank(mat) -> int:
    return len(smith_normal_form(mat))


def rational_rref(mat):
    """Reduced row echelon form over Q; returns (rref, pivot columns)."""
    rows, cols = matrix_shape(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def _primitive(vec):
    """Scale a rational vector to a primitive integer vector, leading entry > 0."""
    from math import gcd, lcm

    den = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def rational_kernel(mat) -> list[tuple[Fraction, ...]]:
    """Basis of {v : mat @ v = 0}, canonicalized to primitive integer vectors."""
    rows, cols = matrix_shape(mat)
    rref, pivots = rational_rref(mat)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(_primitive(v))
    return basis


def solve_unique(mat, rhs):
    """The unique solution of mat @ x = rhs, or None (no solution / underdetermined)."""
    rows, cols = matrix_shape(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    rref, pivots = rational_rref(aug)
    if cols in pivots:
        return None  # inconsistent
    if len(pivots) < cols:
        return None  # kernel nontrivial
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][cols]
    return x


def affine_rank(points) -> int:
    """Dimension of the affine hull of the given points."""
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return len(rational_rref(diffs)[1])


@dataclass(frozen=True)
class Circuit:
    """A minimal affine dependency, split by coefficient sign.

    Both coefficient lists are (index, weight) pairs with weights > 0 and
    each side summing to 1, so that
    sum(w * points[i] for i, w in positive) == sum(w * points[j] for j, w in negative)
    holds exactly.
    """

    positive: tuple[tuple[int, Fraction], ...]
    negative: tuple[tuple[int, Fraction], ...]

    @property
    def positive_support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.positive)

    @property
    def negative_support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.negative)

    @property
    def support(self) -> frozenset[int]:
        return self.positive_support | self.negative_support


def circuit_holds(circuit: Circuit, points) -> bool:
    """Exact check of the two convex combinations and their normalization."""
    if sum(w for _, w in circuit.positive) != 1:
        return False
    if sum(w for _, w in circuit.negative) != 1:
        return False
    if circuit.positive_support & circuit.negative_support:
        return False
    dim = len(points[0])
    lhs = [sum(w * Fraction(points[i][c]) for i, w in circuit.positive) for c in range(dim)]
    rhs = [sum(w * Fraction(points[j][c]) for j, w in circuit.negative) for c in range(dim)]
    return lhs == rhs


def _circuit_from_support(points, support):
    """The circuit on an index subset, or None if it is not one.

    A subset is a circuit exactly when its homogeneous affine system has a
    one-dimensional kernel with full support.
    """
    dim = len(points[support[0]])
    mat = [[points[idx][c] for idx in support] for c in range(dim)]
    mat.append([1] * len(support))
    ker = rational_kernel(mat)
    if len(ker) != 1:
        return None
    v = ker[0]
    if any(x == 0 for x in v):
        return None
    if v[0] < 0:
        v = tuple(-x for x in v)
    pos = [(support[i], w) for i, w in enumerate(v) if w > 0]
    neg = [(support[i], -w) for i, w in enumerate(v) if w < 0]
    if not neg:
        return None
    total = sum(w for _, w in pos)
    return Circuit(
        tuple((i, w / total) for i, w in pos),
        tuple((j, w / total) for j, w in neg),
    )


def affine_circuits(points, max_support=None) -> list[Circuit]:
    """All minimal affine dependencies with support size <= max_support.

    Points are integer (or rational) vectors of a common dimension; the
    positive side is the one containing the smallest index of the support.
    """
    pts = [tuple(p) for p in points]
    if pts:
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise ValueError("points of mixed dimension")
    n = len(pts)
    if max_support is None:
        max_support = n
    if max_support > n:
        raise ValueError("max_support exceeds point count")
    out = []
    for size in range(2, max_support + 1):
        for support in itertools.combinations(range(n), size):
            c = _circuit_from_support(pts, support)
            if c is not None:
                out.append(c)
    return out


def lp_feasible(A, b) -> bool:
    """Exact feasibility of A x = b, x >= 0 (phase-1 simplex, Bland's rule)."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    T = [[Fraction(x) for x in row] for row in A]
    rhs = [Fraction(x) for x in b]
    for i in range(rows):
        if rhs[i] < 0:
            T[i] = [-x for x in T[i]]
            rhs[i] = -rhs[i]
    # tableau columns: original vars, artificial vars, rhs
    width = cols + rows
    tab = [T[i] + [Fraction(int(i == j)) for j in range(rows)] + [rhs[i]] for i in range(rows)]
    basis = [cols + i for i in range(rows)]
    # objective: minimize sum of artificials; reduced costs vanish on the
    # initial (artificial) basis, so only original columns contribute
    z = [Fraction(0)] * (width + 1)
    for i in range(rows):
        for j in range(cols):
            z[j] += tab[i][j]
        z[width] += tab[i][width]
    while True:
        enter = next((j for j in range(width) if z[j] > 0), None)
        if enter is None:
            break
        ratios = [
            (tab[i][width] / tab[i][enter], basis[i], i)
            for i in range(rows)
            if tab[i][enter] > 0
        ]
        if not ratios:
            break  # unbounded cannot happen in phase 1, but be safe
        _, _, leave = min(ratios)
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = z[enter]
        z = [x - f * y for x, y in zip(z, tab[leave])]
        basis[leave] = enter
    return z[width] == 0


def point_in_hull(point, points) -> bool:
    """Exact membership of a point in the convex hull of a point list."""
    if not points:
        return False
    dim = len(point)
    A = [[Fraction(p[c]) for p in points] for c in range(dim)]
    A.append([Fraction(1)] * len(points))
    b = [Fraction(x) for x in point] + [Fraction(1)]
    return lp_feasible(A, b)


def hull_vertex_flags(points) -> list[bool]:
    """Flag each point as a vertex of the convex hull of the whole list.

    Flags are by value: duplicated points get the flag of their common
    location (a repeated extreme point is still a vertex).
    """
    pts = [tuple(p) for p in points]
    distinct = sorted(set(pts))
    flag_of = {}
    for p in distinct:
        others = [q for q in distinct if q != p]
        flag_of[p] = not others or not point_in_hull(p, others)
    return [flag_of[p] for p in pts]
