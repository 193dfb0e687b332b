import itertools
import random
from fractions import Fraction

import pytest

from homplex.complexes import label_tuple
from homplex.graphs import (
    complete_graph,
    cycle_graph,
    empty_graph,
    make_graph,
    nonisomorphic_graphs,
    path_graph,
)
from homplex.hom import (
    MODE_HOM,
    MODE_HOM_PLUS,
    MODE_HOM_PLUS_T,
    MODE_IHOM,
    BipartiteSpec,
    build_hom,
    cayley_slice,
    check_diagram_commutativity,
    check_projection_immersion,
    check_slice_identity,
    hom_f_vector,
    hypersimplex_skeleton_check,
    is_projection_polytopal,
    is_valid_cell,
    join_vertices,
    minkowski_vertices,
    permutohedron_to_hom,
    pi_delta,
    pi_square,
    project_pi,
    projected_complex,
)


def test_cuboctahedron_f_vector():
    hom = build_hom(complete_graph(2), complete_graph(4))
    assert hom_f_vector(hom) == (12, 24, 14)
    sizes = sorted(tuple(sorted(len(p) for p in c.parts)) for c in hom.cells)
    assert sizes.count((1, 3)) == 8
    assert sizes.count((2, 2)) == 6


def test_hom_empty_when_clique_number_too_small():
    assert build_hom(complete_graph(3), cycle_graph(5)).cells == ()


def test_hom_k1_is_full_simplex():
    hom = build_hom(complete_graph(1), cycle_graph(5))
    assert len(hom.cells) == 1
    assert hom.cells[0].parts == (frozenset(range(5)),)
    assert hom_f_vector(hom) == (5, 10, 10, 5, 1)


def test_hom_general_graph_matches_brute_force():
    rng = random.Random(13)
    for _ in range(12):
        gn, hn = rng.randint(1, 3), rng.randint(1, 4)
        G = make_graph(gn, [e for e in itertools.combinations(range(gn), 2) if rng.random() < 0.6])
        H = make_graph(hn, [e for e in itertools.combinations(range(hn), 2) if rng.random() < 0.6])
        subsets = [frozenset(s) for size in range(1, hn + 1) for s in itertools.combinations(range(hn), size)]
        valid = [
            cell
            for cell in itertools.product(subsets, repeat=gn)
            if is_valid_cell(G, H, label_tuple(cell))
        ]
        maximal = [
            c
            for c in valid
            if not any(
                c != d and all(a <= b for a, b in zip(c, d)) for d in valid
            )
        ]
        built = {cell.parts for cell in build_hom(G, H).cells}
        assert built == set(tuple(c) for c in maximal)


EXAMPLE_CELL = label_tuple([{0, 1}, {0, 2}, {1, 2}], "hom_plus")


def test_join_vertex_matrix():
    # six rows: block of the chosen vertex, then the part marker tail
    rows = set(join_vertices(EXAMPLE_CELL, 3))
    expected = {
        (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    }
    assert rows == expected


def test_hexagon_slice_matrix():
    third = Fraction(1, 3)
    slice_rows = cayley_slice(EXAMPLE_CELL, 3)
    assert len(slice_rows) == 8
    expected = {
        tuple(third * x for x in row)
        for row in [
            (1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1),
            (1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1),
            (0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1),
            (0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1),
            (1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1),
            (1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1),
            (0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1),
            (0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1),
        ]
    }
    assert set(slice_rows) == expected


def test_hexagon_projection_pipeline():
    third = Fraction(1, 3)
    slice_rows = cayley_slice(EXAMPLE_CELL, 3)
    mid = [pi_square(p, 3, 3) for p in slice_rows]
    mid_expected = [
        tuple(third * x for x in row)
        for row in [
            (2, 0, 1, 1, 1, 1),
            (1, 0, 2, 1, 1, 1),
            (1, 1, 1, 1, 1, 1),
            (0, 1, 2, 1, 1, 1),
            (2, 1, 0, 1, 1, 1),
            (1, 1, 1, 1, 1, 1),
            (1, 2, 0, 1, 1, 1),
            (0, 2, 1, 1, 1, 1),
        ]
    ]
    assert sorted(mid) == sorted(mid_expected)
    final = [pi_delta(p, 3) for p in mid]
    hexagon = {(2, 0, 1), (1, 0, 2), (0, 1, 2), (2, 1, 0), (1, 2, 0), (0, 2, 1)}
    assert {tuple(3 * c for c in p) for p in final} == hexagon | {(1, 1, 1)}
    # the center is hit twice and is interior
    assert sorted(final).count((third, third, third)) == 2
    flagged = minkowski_vertices(EXAMPLE_CELL.parts, [third] * 3, 3)
    assert (tuple([third] * 3), False) in flagged
    assert sum(1 for _, is_vertex in flagged if is_vertex) == 6


def test_projected_cell_matches_pipeline():
    pc = project_pi(EXAMPLE_CELL, 3)
    assert pc.point_set == {
        (2, 0, 1),
        (1, 0, 2),
        (1, 1, 1),
        (0, 1, 2),
        (2, 1, 0),
        (1, 2, 0),
        (0, 2, 1),
    }
    assert len(pc.points) == 8  # multiplicity kept


def test_cayley_slice_rejects_empty_part():
    t = label_tuple([{0}, set()], "hom_plus")
    with pytest.raises(ValueError):
        cayley_slice(t, 2)


def test_single_part_slice():
    t = label_tuple([{2}])
    (vertex,) = cayley_slice(t, 4)
    assert vertex == (0, 0, 1, 0, 1)


def test_projection_is_permutation_invariant():
    rng = random.Random(17)
    for _ in range(20):
        parts = [
            frozenset(rng.sample(range(5), rng.randint(1, 3)))
            for _ in range(rng.randint(1, 4))
        ]
        base = project_pi(label_tuple(parts), 5)
        for perm in itertools.permutations(parts):
            assert project_pi(label_tuple(perm), 5) == base


def test_projected_complex_k2_k4():
    cells = projected_complex(complete_graph(2), complete_graph(4))
    sizes = sorted(tuple(sorted(len(p) for p in c.parts)) for c in cells)
    assert sizes == [(1, 3), (1, 3), (1, 3), (1, 3), (2, 2), (2, 2), (2, 2)]


def test_projected_complex_plus_is_full_simplex():
    cells = projected_complex(complete_graph(2), complete_graph(4), MODE_HOM_PLUS)
    assert len(cells) == 1
    assert cells[0].parts == ((0, 1, 2, 3),)


def test_projected_complex_k1():
    cells = projected_complex(complete_graph(1), complete_graph(4))
    assert len(cells) == 1
    assert cells[0].parts == ((0, 1, 2, 3),)


def test_polytopality_k2_k4_false():
    res = is_projection_polytopal(complete_graph(4), 2)
    assert res.verdict is False
    assert res.geometric is False
    assert res.witness is not None


def test_polytopality_k2_c5_true():
    res = is_projection_polytopal(cycle_graph(5), 2)
    assert res.verdict is True
    assert res.geometric is True


def test_polytopality_empty():
    res = is_projection_polytopal(cycle_graph(5), 3)
    assert res.verdict == "empty"


def test_hypersimplex_skeleton():
    assert hypersimplex_skeleton_check(complete_graph(4), 2)
    assert hypersimplex_skeleton_check(cycle_graph(5), 1)
    assert hypersimplex_skeleton_check(cycle_graph(6), 2)


def test_octahedron_skeleton_coincides():
    # projected vertices and edges are exactly those of the 2-of-4 hypersimplex
    from homplex.hom import low_dimensional_cells

    verts, edges = low_dimensional_cells(complete_graph(4), 2)
    vert_points = {next(iter(project_pi(t, 4).point_set)) for t in verts}
    assert vert_points == {
        tuple(int(i in pair) for i in range(4))
        for pair in itertools.combinations(range(4), 2)
    }
    edge_pairs = {frozenset(project_pi(t, 4).point_set) for t in edges}
    octa_edges = {
        frozenset((a, b))
        for a, b in itertools.combinations(sorted(vert_points), 2)
        if sum(x != y for x, y in zip(a, b)) == 2
    }
    assert edge_pairs == octa_edges


def test_slice_identity_small():
    assert check_slice_identity(complete_graph(2), complete_graph(4))
    assert check_slice_identity(path_graph(3), cycle_graph(4))
    assert check_slice_identity(empty_graph(3), empty_graph(3))


def test_diagram_commutativity_small():
    assert check_diagram_commutativity(complete_graph(2), complete_graph(3))
    assert check_diagram_commutativity(empty_graph(3), empty_graph(3))
    assert check_diagram_commutativity(path_graph(3), complete_graph(3))


def test_projection_immersion():
    assert check_projection_immersion(complete_graph(4), 2)
    assert check_projection_immersion(cycle_graph(5), 2)


def test_ihom_equals_hom_iff_clique_number_matches():
    for H in nonisomorphic_graphs(4):
        from homplex.graphs import clique_number

        w = clique_number(H)
        for g in (2, 3):
            hom = {c.parts for c in build_hom(complete_graph(g), H, MODE_HOM).cells}
            ihom = {c.parts for c in build_hom(complete_graph(g), H, MODE_IHOM).cells}
            if w < g:
                assert hom == set() and ihom == set()
            else:
                assert (ihom == hom) == (w == g)


def test_plus_modes_on_triangle():
    # maximal join cells of the pair (K_2, K_3): either one full part and
    # one empty, or two nonempty parts
    hom = build_hom(complete_graph(2), complete_graph(3), MODE_HOM_PLUS)
    supports = sorted(tuple(sorted(len(p) for p in c.parts)) for c in hom.cells)
    assert (0, 3) in supports
    transversal = [c for c in hom.cells if all(c.parts)]
    plain = build_hom(complete_graph(2), complete_graph(3), MODE_HOM)
    assert {c.parts for c in transversal} <= {c.parts for c in plain.cells}
    # induced plus mode: transversal cells carry no edge inside a part
    # (the constraint only binds when both parts of a pair are nonempty)
    ihom_plus = build_hom(complete_graph(2), complete_graph(3), "ihom_plus")
    assert any(not all(c.parts) for c in ihom_plus.cells)
    for cell in ihom_plus.cells:
        if not all(cell.parts):
            continue
        for part in cell.parts:
            for a in part:
                for b in part:
                    if a < b:
                        assert not complete_graph(3).has_edge(a, b)


def test_transversal_projection_matches_dissection_complex():
    from homplex.dissections import build_D_plus_t, build_independence_graph

    ind = build_independence_graph(4, 3)
    cells = projected_complex(complete_graph(2), ind, MODE_HOM_PLUS_T)
    simplices = {frozenset(c.parts[0]) for c in cells}
    assert simplices == set(build_D_plus_t(4, 3).facets)


def test_observation_two_cells_same_projection_not_equivalent():
    # two vertices of the path complex project to the same point without
    # being related by an automorphism of the path
    G = path_graph(3)
    H = complete_graph(3)
    a = label_tuple([{0}, {1}, {2}])
    b = label_tuple([{1}, {0}, {2}])
    assert is_valid_cell(G, H, a) and is_valid_cell(G, H, b)
    assert project_pi(a, 3) == project_pi(b, 3)
    # Aut(path 0-1-2) only swaps the endpoints
    assert b.parts not in (a.parts, tuple(reversed(a.parts)))


def test_minkowski_example_quadrilateral_and_segment():
    half = Fraction(1, 2)
    # overlapping edges: a quadrilateral (all four points are vertices)
    quad = minkowski_vertices([{0, 1}, {1, 2}], [half, half], 3)
    assert len(quad) == 4
    assert all(flag for _, flag in quad)
    # disjoint edge + point: a segment
    seg = minkowski_vertices([{0, 1}, {2}], [half, half], 3)
    assert len(seg) == 2
    assert all(flag for _, flag in seg)
    single = minkowski_vertices([{1}], [1], 3)
    assert single == [((0, 1, 0), True)]


def test_minkowski_disjoint_parts_vertex_count():
    rng = random.Random(23)
    for _ in range(10):
        sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
        pool = list(range(8))
        rng.shuffle(pool)
        parts = []
        for s in sizes:
            parts.append({pool.pop() for _ in range(s)})
        w = Fraction(1, len(parts))
        flagged = minkowski_vertices(parts, [w] * len(parts), 8)
        expected = 1
        for s in sizes:
            expected *= s
        assert sum(1 for _, f in flagged if f) == expected


def test_minkowski_weight_validation():
    with pytest.raises(ValueError):
        minkowski_vertices([{0}], [Fraction(1, 2)], 2)


def test_permutohedron_to_hom_hexagon():
    spec = BipartiteSpec(3, 3, frozenset({(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)}))
    G, H, cell = permutohedron_to_hom(spec)
    assert G == empty_graph(3)
    assert H == empty_graph(3)
    pc = project_pi(cell, 3)
    assert (1, 1, 1) in pc.point_set
    assert len(pc.point_set) == 7


def test_permutohedron_disjoint_gives_complete_graph():
    spec = BipartiteSpec(2, 4, frozenset({(0, 0), (0, 1), (1, 2), (1, 3)}))
    G, H, cell = permutohedron_to_hom(spec)
    assert G == complete_graph(2)
    pc = project_pi(cell, 4)
    assert len(pc.point_set) == 4  # product of two segments


def test_permutohedron_single_left_vertex():
    spec = BipartiteSpec(1, 2, frozenset({(0, 0), (0, 1)}))
    _, _, cell = permutohedron_to_hom(spec)
    assert cell.parts == (frozenset({0, 1}),)


def test_permutohedron_matches_minkowski_hull():
    spec = BipartiteSpec(3, 3, frozenset({(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)}))
    _, _, cell = permutohedron_to_hom(spec)
    m = len(cell.parts)
    flagged = minkowski_vertices(cell.parts, [Fraction(1, m)] * m, 3)
    hull = {tuple(c * m for c in p) for p, f in flagged if f}
    pc = project_pi(cell, 3)
    from homplex.linalg import hull_vertex_flags

    pts = sorted(pc.point_set)
    pc_hull = {p for p, f in zip(pts, hull_vertex_flags(pts)) if f}
    assert hull == pc_hull


def test_permutohedron_isolated_left_vertex_rejected():
    with pytest.raises(ValueError):
        permutohedron_to_hom(BipartiteSpec(2, 2, frozenset({(0, 0)})))
