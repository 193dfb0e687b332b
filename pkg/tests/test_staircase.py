import itertools
from math import comb

import pytest

from homplex.complexes import f_vector
from homplex.cyclic import compositions
from homplex.graphs import clique_number
from homplex.staircase import (
    a_inverse,
    a_vector,
    composition_complex,
    embed_staircase,
    full_paths,
    grid_index,
    is_partial_path,
    minimal_paths,
    phi,
    polar_lower_interval,
    psi,
    sigma_complex,
    staircase_embedding_report,
    staircase_graph,
    thm55_report,
    transversal_paths,
    verify_theorem_5_1,
)


def test_full_path_counts():
    assert len(full_paths(2, 3)) == 3
    for r, s in [(2, 2), (3, 3), (4, 3), (5, 4)]:
        paths = full_paths(r, s)
        assert len(paths) == comb(r + s - 2, r - 1)
        assert all(len(p) == r + s - 1 for p in paths)
        assert all((1, 1) in p and (r, s) in p for p in paths)


def test_is_partial_path_examples():
    assert is_partial_path({(1, 1), (2, 1), (2, 3)}, 2, 3)
    assert not is_partial_path({(1, 2), (2, 1)}, 2, 3)
    assert is_partial_path(set(), 2, 3)


def test_is_partial_path_matches_subset_oracle():
    for r, s in [(2, 3), (3, 3), (4, 2)]:
        paths = full_paths(r, s)
        grid = [(i, j) for i in range(1, r + 1) for j in range(1, s + 1)]
        for size in range(0, 5):
            for sub in itertools.combinations(grid, size):
                oracle = any(set(sub) <= p for p in paths)
                assert is_partial_path(sub, r, s) == oracle


def test_sigma_complex_facets():
    k = sigma_complex(2, 3)
    assert len(k.facets) == 3
    assert f_vector(k)[-1] == 3


def test_transversal_and_minimal_paths():
    assert len(minimal_paths(4, 3)) == comb(6, 2)
    for r, s in [(2, 2), (3, 3), (4, 3), (5, 4)]:
        minimal = minimal_paths(r, s)
        assert len(minimal) == comb(r + s - 1, s - 1)
        for p in transversal_paths(r, s):
            assert is_partial_path(p, r, s)
            assert {i for i, _ in p} == set(range(1, r + 1))


def test_a_vector_worked_examples():
    assert a_vector({(1, 1), (2, 1), (3, 1), (4, 3)}, 3) == (3, 0, 1)
    assert a_vector({(1, 1), (2, 1), (3, 2), (4, 3)}, 3) == (2, 1, 1)
    assert a_vector({(1, 1), (2, 1), (3, 3), (4, 3)}, 3) == (2, 0, 2)


def test_a_vector_bijection_with_compositions():
    for r, s in [(2, 3), (4, 3), (5, 4)]:
        by_vector = {a_vector(p, s): p for p in minimal_paths(r, s)}
        assert set(by_vector) == set(compositions(r, s))
        for comp, path in by_vector.items():
            assert a_inverse(comp) == path


def test_phi_psi_worked_example():
    path = frozenset({(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3)})
    assert phi(path, 4, 3) == frozenset({4, 6})
    assert psi({4, 6}, 4, 3) == path
    # a single minimal path maps to its lower facet
    mu = frozenset({(1, 1), (2, 1), (3, 1), (4, 3)})
    assert phi(mu, 4, 3) == frozenset({4, 5, 6, 7})


def test_phi_requires_transversal():
    with pytest.raises(ValueError):
        phi({(1, 1)}, 2, 2)


def test_thm55_small_range():
    for r in range(1, 5):
        for s in (2, 3):
            report = thm55_report(r, s)
            assert all(report.values()), (r, s, report)


def test_composition_complex_2_3():
    cc = composition_complex(2, 3)
    assert cc.vertices() == set(compositions(2, 3))
    assert len([c for c in cc.cells if cc.cell_dimension(c) == 2]) == 3
    skel = cc.one_skeleton()
    assert len(skel.edges) == 8


def test_composition_complex_4_3():
    cc = composition_complex(4, 3)
    assert len(cc.vertices()) == 15
    assert max(cc.cell_dimension(c) for c in cc.cells) == 2


def test_composition_complex_r_1():
    cc = composition_complex(3, 1)
    assert cc.vertices() == {(3,)}
    assert all(cc.cell_dimension(c) == 0 for c in cc.cells)


def test_polar_interval_matches_phi_image():
    for r, s in [(2, 2), (3, 2), (2, 3)]:
        images = {phi(p, r, s) for p in transversal_paths(r, s)}
        assert images == polar_lower_interval(r, s)


def test_staircase_graph_clique_number():
    for r, s in [(2, 2), (3, 3), (4, 3), (2, 5)]:
        g = staircase_graph(r, s)
        assert g.n == r * s
        assert clique_number(g) == r


def test_staircase_graph_edges():
    g = staircase_graph(2, 2)
    idx = lambda p: grid_index(p, 2)
    assert g.has_edge(idx((1, 1)), idx((2, 1)))
    assert g.has_edge(idx((1, 1)), idx((2, 2)))
    assert not g.has_edge(idx((1, 2)), idx((2, 1)))
    assert not g.has_edge(idx((1, 1)), idx((1, 2)))


def test_embed_staircase_small():
    mapping = embed_staircase(4, 3, 2, 2)
    assert mapping[(1, 1)] == (0, 3)
    assert mapping[(1, 2)] == (1, 4)
    assert mapping[(2, 1)] == (3, 6)
    assert mapping[(2, 2)] == (4, 7)


def test_embed_staircase_rejects_out_of_range():
    with pytest.raises(ValueError):
        embed_staircase(4, 3, 3, 2)
    with pytest.raises(ValueError):
        embed_staircase(4, 3, 2, 4)


def test_embedding_reports():
    small = staircase_embedding_report(4, 3, 2, 2)
    assert small["subgraph"] and small["induced_isomorphic"]
    # single-column image: edgeless staircase graph
    column = staircase_embedding_report(4, 3, 1, 3)
    assert column["subgraph"]
    assert column["induced_isomorphic"]
    big = staircase_embedding_report(4, 6, 4, 3)
    assert big["subgraph"]
    # columns two or more apart never cross, so the induced graph gains
    # exactly the decreasing-row pairs at column distance >= 2
    assert not big["induced_isomorphic"]
    extras = set(big["extra_noncrossing_pairs"])
    expected = {
        (p, q)
        for p, q in itertools.combinations(sorted(embed_staircase(4, 6, 4, 3)), 2)
        if abs(p[0] - q[0]) >= 2 and (p[0] - q[0]) * (p[1] - q[1]) < 0
    }
    assert extras == expected


def test_embedding_induced_characterization_across_range():
    # the induced image graph is the staircase graph plus all pairs at
    # column distance >= 2; iso exactly when r <= 2 or s == 1
    from homplex.dissections import crossing

    for k in range(3, 6):
        for m in range(2, 7):
            max_r = ((m - 1) * (k - 2) + 2) // (k - 1)
            for r in range(1, max_r + 1):
                for s in range(1, k):
                    mapping = embed_staircase(k, m, r, s)
                    for p, q in itertools.combinations(sorted(mapping), 2):
                        (i1, j1), (i2, j2) = p, q
                        noncross = not crossing(mapping[p], mapping[q])
                        if i1 == i2:
                            expected = False
                        elif abs(i1 - i2) >= 2:
                            expected = True
                        else:
                            expected = j1 <= j2 if i1 < i2 else j2 <= j1
                        assert noncross == expected, (k, m, r, s, p, q)


def test_theorem_5_1_small_instance():
    report = verify_theorem_5_1(4, 3, 2, 2)
    assert report["facets_are_full_paths"]
    assert report["induced_equals_plain"]
    assert report["triangulation_in_d_plus"]
    assert report["image_cells_match_staircase_cells"]
    assert report["slice_vertices_are_compositions"]
    assert report["slice_skeleton_is_composition_graph"]
    assert report["slice_cells_in_projected_complex"]


def test_theorem_5_1_trivial_instance():
    report = verify_theorem_5_1(4, 3, 1, 1)
    assert report["facets_are_full_paths"]
    assert report["facet_count"] == 1
