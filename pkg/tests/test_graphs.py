import itertools
import random

import pytest

from homplex.graphs import (
    clique_number,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_multipartite_cells,
    graph_from_json,
    graph_from_name,
    graph_to_json,
    is_complete_bipartite,
    is_induced_multipartite,
    make_graph,
    maximal_cliques,
    nonisomorphic_graphs,
)


def random_graph(rng, n):
    return make_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])


def brute_clique_number(g):
    best = 1
    for size in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                best = size
    return best


def test_complement_of_complete_is_empty():
    assert complement(complete_graph(4)) == empty_graph(4)
    assert complement(empty_graph(3)) == complete_graph(3)


def test_complement_involution():
    rng = random.Random(1)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 8))
        assert complement(complement(g)) == g


def test_clique_number_small():
    assert clique_number(complete_graph(4)) == 4
    assert clique_number(empty_graph(3)) == 1
    assert clique_number(cycle_graph(5)) == 2


def test_clique_number_against_brute_force():
    rng = random.Random(2)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8))
        assert clique_number(g) == brute_clique_number(g)


def test_independent_set_via_complement():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 8))
        best = 1
        for size in range(1, g.n + 1):
            for sub in itertools.combinations(range(g.n), size):
                if not any(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                    best = size
        assert clique_number(complement(g)) == best


def test_is_complete_bipartite():
    assert is_complete_bipartite(complete_graph(4), {0, 1}, {2, 3})
    assert not is_complete_bipartite(cycle_graph(5), {0}, {2, 3})
    assert is_complete_bipartite(cycle_graph(5), set(), {1, 2})
    with pytest.raises(ValueError):
        is_complete_bipartite(complete_graph(3), {0}, {5})


def test_is_induced_multipartite():
    k4 = complete_graph(4)
    assert is_induced_multipartite(k4, [{0}, {1}, {2}])
    assert not is_induced_multipartite(k4, [{0, 1}, {2}])
    assert not is_induced_multipartite(cycle_graph(5), [{0}, {2}])
    with pytest.raises(ValueError):
        is_induced_multipartite(k4, [{0, 1}, {1, 2}])


def test_multipartite_cells_k2_k4_counts():
    cells = enumerate_multipartite_cells(complete_graph(4), 2)
    assert len(cells) == 50
    maximal = enumerate_multipartite_cells(complete_graph(4), 2, maximal_only=True)
    assert len(maximal) == 14
    sizes = sorted(tuple(sorted(len(p) for p in cell)) for cell in maximal)
    assert sizes.count((1, 3)) == 8
    assert sizes.count((2, 2)) == 6


def test_multipartite_cells_one_part():
    h = cycle_graph(5)
    cells = enumerate_multipartite_cells(h, 1)
    assert len(cells) == 2**5 - 1


def test_multipartite_cells_empty_when_clique_too_small():
    assert enumerate_multipartite_cells(cycle_graph(5), 3) == []


def test_ordered_count_is_factorial_times_unordered():
    rng = random.Random(4)
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 5))
        for parts in (2, 3):
            cells = enumerate_multipartite_cells(g, parts)
            unordered = {frozenset(c) for c in cells}
            # all parts of a cell are distinct (disjoint nonempty), so each
            # unordered cell has exactly parts! orderings
            import math

            assert len(cells) == math.factorial(parts) * len(unordered)


def test_induced_cells_subset_of_plain():
    rng = random.Random(5)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 6))
        for parts in (2, 3):
            plain = set(enumerate_multipartite_cells(g, parts))
            induced = set(enumerate_multipartite_cells(g, parts, induced=True))
            assert induced <= plain
            w = clique_number(g)
            if w >= parts:
                assert (induced == plain) == (w == parts)
            else:
                assert not plain and not induced


def test_maximal_cliques_cover():
    g = cycle_graph(6)
    cliques = maximal_cliques(g)
    assert all(len(c) == 2 for c in cliques)
    assert len(cliques) == 6


def test_json_roundtrip():
    g = make_graph(4, [(0, 1), (1, 0), (2, 3)])
    assert len(g.edges) == 2  # duplicates collapse
    assert graph_from_json(graph_to_json(g)) == g


def test_family_names():
    assert graph_from_name("K4") == complete_graph(4)
    assert graph_from_name("C5") == cycle_graph(5)
    assert graph_from_name("E3") == empty_graph(3)
    with pytest.raises(ValueError):
        graph_from_name("Q7")


def test_loops_rejected():
    with pytest.raises(ValueError):
        make_graph(3, [(1, 1)])


def test_nonisomorphic_graph_counts():
    # classical counts of graphs up to isomorphism
    for n, count in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
        assert len(nonisomorphic_graphs(n)) == count
