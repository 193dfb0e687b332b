import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homplex.linalg import (
    affine_circuits,
    affine_rank,
    circuit_holds,
    hull_vertex_flags,
    lp_feasible,
    point_in_hull,
    rational_kernel,
    smith_normal_form,
    solve_unique,
)


def minor_gcd(mat, k):
    """Oracle: gcd of all k x k minors, via brute determinant expansion."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0

    def det(sub):
        n = len(sub)
        if n == 0:
            return 1
        total = 0
        for perm in itertools.permutations(range(n)):
            sign = 1
            seen = list(perm)
            for i in range(n):
                for j in range(i + 1, n):
                    if seen[i] > seen[j]:
                        sign = -sign
            prod = 1
            for i in range(n):
                prod *= sub[i][perm[i]]
            total += sign * prod
        return total

    g = 0
    for rsel in itertools.combinations(range(rows), k):
        for csel in itertools.combinations(range(cols), k):
            g = gcd(g, det([[mat[i][j] for j in csel] for i in rsel]))
    return abs(g)


def test_snf_identity():
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]


def test_snf_zero_matrix():
    assert smith_normal_form([[0, 0], [0, 0], [0, 0]]) == []


def test_snf_hand_example():
    # d1 = gcd of entries = 2, d1*d2 = |det| = |2*8 - 4*6| = 8
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]


def test_snf_empty():
    assert smith_normal_form([]) == []


def test_snf_matches_determinantal_divisors():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        mat = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        factors = smith_normal_form(mat)
        prod = 1
        for k, d in enumerate(factors, start=1):
            prod *= d
            assert prod == minor_gcd(mat, k)
        if len(factors) < min(rows, cols):
            assert minor_gcd(mat, len(factors) + 1) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=2, max_size=4), st.randoms())
def test_snf_permutation_invariant(mat, rng):
    rows = list(mat)
    rng.shuffle(rows)
    cols = list(range(3))
    rng.shuffle(cols)
    shuffled = [[row[c] for c in cols] for row in rows]
    assert smith_normal_form(mat) == smith_normal_form(shuffled)


def test_kernel_identity():
    assert rational_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_kernel_one_dim():
    assert rational_kernel([[1, 1]]) == [(Fraction(1), Fraction(-1))]


def test_kernel_triangle_boundary():
    # edges 01, 02, 12 of a 3-cycle; cycle space has rank 1
    d1 = [
        [-1, -1, 0],
        [1, 0, -1],
        [0, 1, 1],
    ]
    basis = rational_kernel(d1)
    assert len(basis) == 1
    for row in d1:
        assert sum(c * v for c, v in zip(row, basis[0])) == 0


def test_solve_unique():
    assert solve_unique([[2, 0], [0, 4]], [6, 8]) == [3, 2]
    assert solve_unique([[1, 1]], [1]) is None
    assert solve_unique([[1], [1]], [1, 2]) is None


def test_collinear_triple_circuit():
    circuits = affine_circuits([(0, 0), (1, 0), (2, 0)], 3)
    assert len(circuits) == 1
    c = circuits[0]
    assert c.positive_support == {0, 2}
    assert c.negative_support == {1}
    assert dict(c.positive) == {0: Fraction(1, 2), 2: Fraction(1, 2)}
    assert dict(c.negative) == {1: Fraction(1)}


def test_affinely_independent_points_have_no_circuit():
    assert affine_circuits([(0, 0), (1, 0), (0, 1)], 3) == []


def test_duplicate_points_form_support_two_circuit():
    circuits = affine_circuits([(1, 2), (1, 2)], 2)
    assert len(circuits) == 1
    assert circuits[0].support == {0, 1}


def test_circuits_are_exact():
    rng = random.Random(11)
    for _ in range(20):
        pts = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(6)]
        for c in affine_circuits(pts, 5):
            assert circuit_holds(c, pts)
            assert sum(w for _, w in c.positive) == 1
            assert sum(w for _, w in c.negative) == 1


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        affine_circuits([(0, 0), (1,)], 2)


def test_affine_rank():
    assert affine_rank([(0, 0), (1, 0), (2, 0)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2
    assert affine_rank([(5, 5)]) == 0


def test_lp_feasible_simple():
    # x + y = 1, x - y = 0 has x = y = 1/2 >= 0
    assert lp_feasible([[1, 1], [1, -1]], [1, 0])
    # x + y = -1 is infeasible with x, y >= 0
    assert not lp_feasible([[1, 1]], [-1])


def test_point_in_hull():
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert point_in_hull((Fraction(1, 2), Fraction(1, 2)), square)
    assert not point_in_hull((2, 0), square)


def brute_in_hull(p, pts):
    """Oracle: Caratheodory search over affinely independent subsets."""
    r = affine_rank(pts)
    for size in range(1, r + 2):
        for sub in itertools.combinations(pts, size):
            dim = len(p)
            mat = [[q[c] for q in sub] for c in range(dim)]
            mat.append([1] * size)
            sol = solve_unique(mat, list(p) + [1])
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def test_hull_vertex_flags_against_brute_force():
    rng = random.Random(3)
    for _ in range(15):
        pts = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(7)]
        flags = hull_vertex_flags(pts)
        distinct = sorted(set(pts))
        for p, f in zip(pts, flags):
            others = [q for q in distinct if q != p]
            assert f == (not brute_in_hull(p, others))
