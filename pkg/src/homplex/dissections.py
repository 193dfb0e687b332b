"""Polygon dissections into k-gons: diagonals, crossing structure, and the
associated complexes.

An N-gon with N = m(k-2)+2 dissects into m convex k-gons; the usable
diagonals join x to x + (k-1) + j(k-2) mod N.  The independence graph
joins two diagonals when their relative interiors do not cross; maximal
pairwise-noncrossing sets are the dissections.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from homplex.complexes import (
    ProjectedCell,
    SimplicialComplex,
    projected_cell,
    simplicial_complex,
)
from homplex.graphs import Graph, adjacency_masks, make_graph, maximal_cliques

Diagonal = tuple[int, int]


def polygon_size(k: int, m: int) -> int:
    if k < 3:
        raise ValueError("k must be >= 3")
    if m < 1:
        raise ValueError("m must be >= 1")
    return m * (k - 2) + 2


def allowable_diagonals(k: int, m: int) -> list[Diagonal]:
    """The diagonals that can occur in a dissection into m k-gons, as
    sorted endpoint pairs (a, b) with a < b."""
    n = polygon_size(k, m)
    out = set()
    for x in range(n):
        for j in range(m - 1):
            y = (x + k - 1 + j * (k - 2)) % n
            out.add((x, y) if x < y else (y, x))
    diagonals = sorted(out)
    assert len(diagonals) == (m - 1) * n // 2
    return diagonals


def crossing(d1: Diagonal, d2: Diagonal) -> bool:
    """Strict interleaving of chords of a convex polygon; sharing an
    endpoint never counts as crossing."""
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return a < c < b < d or c < a < d < b


@lru_cache(maxsize=None)
def _diagonal_index(k: int, m: int):
    diagonals = tuple(allowable_diagonals(k, m))
    return diagonals, {d: i for i, d in enumerate(diagonals)}


def build_crossing_graph(k: int, m: int) -> Graph:
    diagonals, _ = _diagonal_index(k, m)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(diagonals)), 2)
        if crossing(diagonals[i], diagonals[j])
    ]
    return make_graph(len(diagonals), edges)


def build_independence_graph(k: int, m: int) -> Graph:
    diagonals, _ = _diagonal_index(k, m)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(diagonals)), 2)
        if not crossing(diagonals[i], diagonals[j])
    ]
    return make_graph(len(diagonals), edges)


def build_T(k: int, m: int) -> SimplicialComplex:
    """The complex of pairwise-noncrossing allowable diagonal sets; its
    facets are the dissections (size m-1 each)."""
    if m < 2:
        raise ValueError("need m >= 2 for a nonempty diagonal set")
    ind = build_independence_graph(k, m)
    facets = maximal_cliques(ind)
    return simplicial_complex(ind.n, facets)


def polygon_dissections(k: int, m: int) -> list[frozenset[Diagonal]]:
    """Independent recursive enumeration of all dissections of the N-gon
    into m k-gons, as sets of diagonals.

    Chooses the k-gon containing the boundary edge (vs[0], vs[1]) and
    recurses on the remaining arcs; used as an oracle against the
    clique-based facets.
    """
    n = polygon_size(k, m)

    def is_polygon_edge(a, b):
        return (b - a) % n in (1, n - 1)

    def rec(vs):
        if len(vs) == k:
            return [frozenset()]
        results = []
        size = len(vs)
        for extra in itertools.combinations(range(2, size), k - 2):
            face_pos = (0, 1) + extra
            arcs = []
            valid = True
            for i in range(1, k):
                if i + 1 < k:
                    seg = vs[face_pos[i] : face_pos[i + 1] + 1]
                else:
                    seg = vs[face_pos[i] :] + (vs[0],)
                t = len(seg)
                if t == 2:
                    continue
                if t < k or (t - 2) % (k - 2) != 0:
                    valid = False
                    break
                arcs.append(seg)
            if not valid:
                continue
            face = [vs[p] for p in face_pos]
            level = set()
            for u, w in zip(face, face[1:] + face[:1]):
                if not is_polygon_edge(u, w):
                    level.add((u, w) if u < w else (w, u))
            for combo in itertools.product(*(rec(seg) for seg in arcs)):
                results.append(frozenset(level).union(*combo))
        return results

    return sorted(rec(tuple(range(n))), key=sorted)


def dissection_count(k: int, m: int) -> int:
    from math import comb

    return comb((k - 1) * m, m - 1) // m


def wedge_rank(k: int, m: int) -> int:
    from math import comb

    return comb(m * (k - 2), m - 1) // m


def build_D(k: int, m: int) -> list[ProjectedCell]:
    """Maximal projected cells: crossing-clique part systems, pairwise
    noncrossing across parts, in unscaled integer coordinates."""
    if m < 2:
        raise ValueError("need m >= 2")
    return [
        projected_cell(len(_diagonal_index(k, m)[0]), parts)
        for parts in maximal_part_systems(k, m)
    ]


def maximal_part_systems(k: int, m: int) -> list[tuple[frozenset[int], ...]]:
    """Maximal unordered systems of m-1 disjoint crossing-cliques with all
    cross-clique pairs noncrossing, on diagonal indices.

    Parts of any full system are necessarily cliques of the crossing
    graph: one diagonal from each part is an independent set, and those
    have size at most m-1.
    """
    cr = build_crossing_graph(k, m)
    adj = adjacency_masks(cr)
    n = cr.n
    full = (1 << n) - 1
    g = m - 1

    def bits(mask):
        while mask:
            b = mask & -mask
            yield b.bit_length() - 1
            mask ^= b

    def cliques_within(cand):
        """All nonempty cliques of the crossing graph inside cand."""
        out = []

        def grow(mask, allowed):
            out.append(mask)
            for v in bits(allowed):
                grow(mask | (1 << v), allowed & adj[v] & ~((1 << (v + 1)) - 1))

        for v in bits(cand):
            grow(1 << v, cand & adj[v] & ~((1 << (v + 1)) - 1))
        return out

    def independent_rest(cand, part):
        rest = cand & ~part
        for v in bits(part):
            rest &= ~adj[v]
        return rest

    results = []

    def grow(parts, cand, min_elt):
        if len(parts) == g:
            # maximal: no unused diagonal is noncrossing with all other
            # parts (such a diagonal would extend part i, and necessarily
            # crosses all of part i by the independence bound)
            for i in range(g):
                ext = full
                for j, other in enumerate(parts):
                    ext &= ~other
                    if j != i:
                        for v in bits(other):
                            ext &= ~adj[v]
                if ext:
                    return
            results.append(tuple(frozenset(bits(p)) for p in parts))
            return
        for part in cliques_within(cand):
            low = (part & -part).bit_length() - 1
            if low <= min_elt:
                continue
            grow(parts + [part], independent_rest(cand, part), low)

    grow([], full, -1)
    return sorted(results, key=lambda ps: tuple(sorted(p) for p in ps))


def build_D_plus(k: int, m: int) -> SimplicialComplex:
    """The homotopy model of the projected complex: simplices are the
    vertex unions of its polytopal cells (the transversal projection)."""
    if m < 2:
        raise ValueError("need m >= 2")
    n = len(_diagonal_index(k, m)[0])
    unions = [frozenset().union(*parts) for parts in maximal_part_systems(k, m)]
    return simplicial_complex(n, unions)


def build_D_plus_t(k: int, m: int) -> SimplicialComplex:
    return build_D_plus(k, m)


def flip_graph(k: int, m: int) -> Graph:
    """Dissections as vertices; edges are the one-dimensional projected
    cells (equivalently: replace exactly one diagonal)."""
    t = build_T(k, m)
    dissections = sorted(t.facets, key=sorted)
    index = {d: i for i, d in enumerate(dissections)}
    edges = set()
    # a 1-cell is a crossing pair plus m-2 fixed noncrossing singletons;
    # its two vertices are the two dissections through each pair member
    for parts in one_dimensional_part_systems(k, m):
        double = next(p for p in parts if len(p) == 2)
        rest = frozenset().union(*(p for p in parts if len(p) == 1))
        a, b = sorted(double)
        da = frozenset(rest | {a})
        db = frozenset(rest | {b})
        edges.add((min(index[da], index[db]), max(index[da], index[db])))
    return make_graph(len(dissections), edges)


def one_dimensional_part_systems(k: int, m: int):
    """Part systems of total size m: one crossing pair, the rest singletons."""
    cr = build_crossing_graph(k, m)
    ind_adj = adjacency_masks(build_independence_graph(k, m))
    cr_adj = adjacency_masks(cr)
    n = cr.n
    out = []
    for a, b in itertools.combinations(range(n), 2):
        if not (cr_adj[a] >> b) & 1:
            continue
        # common noncrossing partners of a and b
        cand = ind_adj[a] & ind_adj[b] & ~(1 << a) & ~(1 << b)
        pool = [v for v in range(n) if (cand >> v) & 1]
        for singles in itertools.combinations(pool, m - 2):
            if all(
                (ind_adj[u] >> v) & 1
                for u, v in itertools.combinations(singles, 2)
            ):
                out.append(
                    tuple([frozenset({a, b})] + [frozenset({v}) for v in singles])
                )
    return out


def flip_graph_direct(k: int, m: int) -> Graph:
    """Oracle flip graph: dissections adjacent iff they differ in exactly
    one diagonal."""
    t = build_T(k, m)
    dissections = sorted(t.facets, key=sorted)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(dissections)), 2)
        if len(dissections[i] & dissections[j]) == m - 2
    ]
    return make_graph(len(dissections), edges)


def build_ic_delta(k: int, m: int) -> SimplicialComplex:
    """Faces are unions of pairwise-noncrossing crossing-cliques: every
    connected crossing component of the face must be a clique."""
    if m < 2:
        raise ValueError("need m >= 2")
    cr = build_crossing_graph(k, m)
    adj = adjacency_masks(cr)
    n = cr.n

    def valid(mask):
        # components of the crossing graph restricted to mask must be cliques
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = 1 << v
            frontier = adj[v] & mask
            while frontier & ~comp:
                comp |= frontier
                nxt = 0
                for w in range(n):
                    if (comp >> w) & 1:
                        nxt |= adj[w] & mask
                frontier = nxt
            for w in range(n):
                if (comp >> w) & 1:
                    if comp & ~adj[w] & ~(1 << w):
                        return False
            rest &= ~comp
        return True

    faces = [
        [v for v in range(n) if (mask >> v) & 1]
        for mask in range(1, 1 << n)
        if valid(mask)
    ]
    return simplicial_complex(n, faces)


def ic_delta_transversal(k: int, m: int) -> SimplicialComplex:
    """The subcomplex induced by unions of exactly m-1 nonempty pairwise
    noncrossing crossing-cliques."""
    n = len(_diagonal_index(k, m)[0])
    cr = build_crossing_graph(k, m)
    adj = adjacency_masks(cr)

    def splits_into_g_cliques(mask, g):
        # components of Cr|mask are the candidate cliques
        comps = []
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = 1 << v
            changed = True
            while changed:
                changed = False
                for w in range(n):
                    if (comp >> w) & 1:
                        add = adj[w] & mask & ~comp
                        if add:
                            comp |= add
                            changed = True
            comps.append(comp)
            rest &= ~comp
        if len(comps) != g:
            return False
        for comp in comps:
            for w in range(n):
                if (comp >> w) & 1 and comp & ~adj[w] & ~(1 << w):
                    return False
        return True

    faces = []
    for mask in range(1, 1 << n):
        if splits_into_g_cliques(mask, m - 1):
            faces.append([v for v in range(n) if (mask >> v) & 1])
    return simplicial_complex(n, faces)


def dimension_of_D(k: int, m: int) -> tuple[int, int]:
    """Measured (dim D, dim D_plus) from the maximal cells; raises if they
    disagree with the closed forms floor(m/2)(k-2) and +m-2."""
    systems = maximal_part_systems(k, m)
    dim_d = max(sum(len(p) for p in parts) - (m - 1) for parts in systems)
    dim_plus = max(sum(len(p) for p in parts) - 1 for parts in systems)
    expected_d = (m // 2) * (k - 2)
    if dim_d != expected_d or dim_plus != expected_d + m - 2:
        raise AssertionError(
            f"measured dims {(dim_d, dim_plus)} disagree with closed form "
            f"{(expected_d, expected_d + m - 2)}"
        )
    return dim_d, dim_plus
