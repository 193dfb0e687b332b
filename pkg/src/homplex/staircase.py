"""Lattice paths, the staircase triangulation of a product of two
simplices, and the composition complex it slices to.

Grid points are 1-indexed pairs (i, j) in [r] x [s]; a partial lattice
path is any subset of a monotone unit-step path from (1, 1) to (r, s).
Column slices of a transversal path are the parts of a cell of the
complete-graph homomorphism complex of the staircase graph, and the
equal-weight slice of that cell complex is the composition complex,
anti-isomorphic to an interval of lower faces of an even-dimensional
cyclic polytope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from homplex.cyclic import (
    chi,
    chi_inverse,
    composition_graph,
    compositions,
    facets,
    lower_facets,
)
from homplex.graphs import Graph, make_graph

GridPoint = tuple[int, int]


def grid_index(point: GridPoint, s: int) -> int:
    i, j = point
    return (i - 1) * s + (j - 1)


def full_paths(r: int, s: int) -> list[frozenset[GridPoint]]:
    """Monotone unit-step paths from (1, 1) to (r, s), as vertex sets."""
    if r < 1 or s < 1:
        raise ValueError("need r, s >= 1")
    out = []
    # a path is determined by the rows where each column lives: runs of
    # weakly increasing intervals covering [1, s]
    def grow(col, row, points):
        if col == r:
            out.append(frozenset(points + [(r, y) for y in range(row, s + 1)]))
            return
        for top in range(row, s + 1):
            grow(col + 1, top, points + [(col, y) for y in range(row, top + 1)])

    grow(1, 1, [])
    return out


def is_partial_path(points, r: int, s: int) -> bool:
    """Subset-of-a-path test: within range, and across columns b < b' every
    row in column b is <= every row in column b'."""
    pts = set(points)
    for i, j in pts:
        if not (1 <= i <= r and 1 <= j <= s):
            return False
    columns: dict[int, list[int]] = {}
    for i, j in pts:
        columns.setdefault(i, []).append(j)
    cols = sorted(columns)
    for a, b in itertools.combinations(cols, 2):
        if max(columns[a]) > min(columns[b]):
            return False
    return True


def sigma_complex(r: int, s: int):
    """The staircase triangulation as a simplicial complex on the grid,
    with the grid indexing map."""
    from homplex.complexes import simplicial_complex

    paths = full_paths(r, s)
    facet_sets = [frozenset(grid_index(p, s) for p in path) for path in paths]
    return simplicial_complex(r * s, facet_sets)


def transversal_paths(r: int, s: int) -> list[frozenset[GridPoint]]:
    """Partial paths with at least one point in every column."""
    out = []

    def grow(col, min_row, points):
        if col > r:
            out.append(frozenset(points))
            return
        for subset_size in range(1, s - min_row + 2):
            for rows in itertools.combinations(range(min_row, s + 1), subset_size):
                grow(col + 1, rows[-1], points + [(col, y) for y in rows])

    grow(1, 1, [])
    return sorted(out, key=sorted)


def minimal_paths(r: int, s: int) -> list[frozenset[GridPoint]]:
    """Transversal paths with exactly one point per column."""
    return [p for p in transversal_paths(r, s) if len(p) == r]


def a_vector(path, s: int) -> tuple[int, ...]:
    """Row counts of a path: the i-th entry is the size of row i."""
    counts = [0] * s
    for _, j in path:
        counts[j - 1] += 1
    return tuple(counts)


def a_inverse(composition) -> frozenset[GridPoint]:
    """The minimal path whose row counts are the given composition."""
    comp = list(composition)
    points = []
    col = 1
    for row, count in enumerate(comp, start=1):
        for _ in range(count):
            points.append((col, row))
            col += 1
    return frozenset(points)


def minimal_subpaths(path) -> list[frozenset[GridPoint]]:
    """One-per-column monotone selections inside a transversal path."""
    columns: dict[int, list[int]] = {}
    for i, j in path:
        columns.setdefault(i, []).append(j)
    cols = sorted(columns)
    out = []
    for choice in itertools.product(*(sorted(columns[c]) for c in cols)):
        if all(a <= b for a, b in zip(choice, choice[1:])):
            out.append(frozenset(zip(cols, choice)))
    return out


@dataclass(frozen=True)
class CompositionComplex:
    """The equal-weight slice of the staircase triangulation: one cell per
    transversal path, with the row-count vectors of its minimal subpaths as
    vertices."""

    r: int
    s: int
    cells: tuple[frozenset[GridPoint], ...]

    def cell_vertices(self, path) -> frozenset[tuple[int, ...]]:
        return frozenset(a_vector(p, self.s) for p in minimal_subpaths(path))

    def cell_dimension(self, path) -> int:
        return len(path) - self.r

    def vertices(self) -> set[tuple[int, ...]]:
        return {a_vector(p, self.s) for p in self.cells if len(p) == self.r}

    def one_skeleton(self) -> Graph:
        comps = compositions(self.r, self.s)
        idx = {c: i for i, c in enumerate(comps)}
        edges = set()
        for path in self.cells:
            if len(path) == self.r + 1:
                a, b = sorted(self.cell_vertices(path))
                edges.add((min(idx[a], idx[b]), max(idx[a], idx[b])))
        return make_graph(len(comps), edges)


def composition_complex(r: int, s: int) -> CompositionComplex:
    return CompositionComplex(r, s, tuple(transversal_paths(r, s)))


# ---------------------------------------------------------------------------
# the inclusion-reversing correspondence with lower cyclic faces


def phi(path, r: int, s: int) -> frozenset[int]:
    """Intersection of the lower facets attached to the minimal subpaths."""
    if {i for i, _ in path} != set(range(1, r + 1)):
        raise ValueError("path is not transversal")
    subs = minimal_subpaths(path)
    out = None
    for p in subs:
        f = chi_inverse(a_vector(p, s))
        out = f if out is None else out & f
    return frozenset(out)


def psi(face, r: int, s: int) -> frozenset[GridPoint]:
    """Union of the minimal paths of the lower facets containing a face."""
    n, d = r + 2 * s - 2, 2 * s - 2
    out: set[GridPoint] = set()
    for f in lower_facets(n, d):
        if frozenset(face) <= f:
            out |= a_inverse(chi(f, n))
    return frozenset(out)


def polar_lower_interval(r: int, s: int) -> set[frozenset[int]]:
    """Faces of the cyclic polytope dual to the polar subcomplex induced on
    lower-facet vertices, kept when the polar dimension is at most s - 1.

    These are the nonempty intersections of lower facets with at least
    d/2 = s - 1 elements all of whose containing facets are lower.
    """
    n, d = r + 2 * s - 2, 2 * s - 2
    lows = lower_facets(n, d)
    alls = facets(n, d)
    closure: set[frozenset[int]] = set(lows)
    frontier = set(lows)
    while frontier:
        new = set()
        for a in frontier:
            for b in lows:
                c = a & b
                if c and c not in closure:
                    new.add(c)
        closure |= new
        frontier = new
    out = set()
    for g in closure:
        if len(g) < d // 2:
            continue
        if all(g <= f and f in set(lows) or not g <= f for f in alls):
            out.add(g)
    return out


def thm55_report(r: int, s: int) -> dict:
    """Inclusion-reversing bijection between transversal paths and the
    lower-face interval, plus the composition-graph skeleton."""
    paths = transversal_paths(r, s)
    images = {}
    order_ok = True
    roundtrip_ok = True
    for p in paths:
        images[p] = phi(p, r, s)
        if psi(images[p], r, s) != p:
            roundtrip_ok = False
    injective = len(set(images.values())) == len(paths)
    for a, b in itertools.combinations(paths, 2):
        if a <= b and not images[b] <= images[a]:
            order_ok = False
        if images[b] < images[a] and not a <= b:
            order_ok = False
    interval = polar_lower_interval(r, s)
    image_matches = set(images.values()) == interval
    cc = composition_complex(r, s)
    graph, _ = composition_graph(r, s)
    skeleton_ok = cc.one_skeleton() == graph
    vertex_ok = cc.vertices() == set(compositions(r, s))
    return {
        "injective": injective,
        "order_reversing": order_ok,
        "roundtrip": roundtrip_ok,
        "image_is_lower_interval": image_matches,
        "skeleton_is_composition_graph": skeleton_ok,
        "vertices_are_lattice_points": vertex_ok,
    }


# ---------------------------------------------------------------------------
# the staircase graph and its embedding among polygon diagonals


def staircase_graph(r: int, s: int) -> Graph:
    """Grid graph joining (i1, j1) to (i2, j2) iff i1 < i2 and j1 <= j2;
    vertices are numbered (i-1)*s + (j-1)."""
    if r < 1 or s < 1:
        raise ValueError("need r, s >= 1")
    edges = []
    points = [(i, j) for i in range(1, r + 1) for j in range(1, s + 1)]
    for p, q in itertools.combinations(points, 2):
        (i1, j1), (i2, j2) = p, q
        if i1 < i2 and j1 <= j2 or i2 < i1 and j2 <= j1:
            edges.append((grid_index(p, s), grid_index(q, s)))
    return make_graph(r * s, edges)


def embed_staircase(k: int, m: int, r: int, s: int) -> dict[GridPoint, tuple[int, int]]:
    """The canonical placement of the grid among the allowable diagonals:
    (b+1, j+1) goes to the diagonal (b(k-1)+j, b(k-1)+j+k-1) mod N."""
    from homplex.dissections import allowable_diagonals, polygon_size

    if not 1 <= s <= k - 1:
        raise ValueError(f"s must lie in [1, {k - 1}]")
    if not 1 <= r or r * (k - 1) > (m - 1) * (k - 2) + 2:
        raise ValueError(f"r must lie in [1, {((m - 1) * (k - 2) + 2) // (k - 1)}]")
    n = polygon_size(k, m)
    allowed = set(allowable_diagonals(k, m))
    out = {}
    for b in range(r):
        for j in range(s):
            x = (b * (k - 1) + j) % n
            y = (x + k - 1) % n
            d = (x, y) if x < y else (y, x)
            if d not in allowed:
                raise AssertionError(f"image diagonal {d} is not allowable")
            out[(b + 1, j + 1)] = d
    return out


def staircase_embedding_report(k: int, m: int, r: int, s: int) -> dict:
    """How the embedded grid sits inside the diagonal independence graph.

    subgraph: every staircase edge maps to a noncrossing pair, and
    same-column pairs all cross.  induced_isomorphic: the noncrossing
    relation on the image agrees with the staircase edge rule exactly
    (adjacent columns always agree; columns at distance two or more never
    cross, so extra edges appear whenever r >= 3 and s >= 2).
    """
    from homplex.dissections import crossing

    mapping = embed_staircase(k, m, r, s)
    points = sorted(mapping)
    subgraph = True
    induced_iso = True
    extra_edges = []
    for p, q in itertools.combinations(points, 2):
        (i1, j1), (i2, j2) = p, q
        s_edge = (i1 < i2 and j1 <= j2) or (i2 < i1 and j2 <= j1)
        noncross = not crossing(mapping[p], mapping[q])
        if s_edge and not noncross:
            subgraph = False
        if i1 == i2 and noncross:
            subgraph = False
        if noncross != s_edge:
            induced_iso = False
            if noncross and not s_edge:
                extra_edges.append((p, q))
    return {
        "subgraph": subgraph,
        "induced_isomorphic": induced_iso,
        "extra_noncrossing_pairs": extra_edges,
    }


def verify_theorem_5_1(k: int, m: int, r: int, s: int) -> dict:
    """Staircase copies inside the dissection complexes.

    Checks: (i) facets of the complete-graph complex of the staircase
    graph are exactly the full lattice paths, and the induced/plain
    complexes coincide; (ii) the embedded triangulation's simplices are
    faces of the transversal projected complex; (iii) the equal-weight
    slice of the embedded copy is the composition complex (vertices map to
    row-count vectors and the skeleton is the composition graph), with the
    sliced cells honest cells of the projected complex when r = m - 1.
    """
    from homplex.complexes import has_face
    from homplex.dissections import (
        allowable_diagonals,
        build_D_plus,
        build_independence_graph,
    )
    from homplex.graphs import complete_graph
    from homplex.hom import MODE_IHOM, build_hom, is_valid_cell, low_dimensional_cells, project_pi

    report = {}
    s_graph = staircase_graph(r, s)
    hom = build_hom(complete_graph(r), s_graph)
    paths = full_paths(r, s)
    path_cells = set()
    for path in paths:
        columns: dict[int, set[int]] = {}
        for p in sorted(path):
            columns.setdefault(p[0], set()).add(grid_index(p, s))
        path_cells.add(frozenset(frozenset(v) for v in columns.values()))
    hom_cells = {frozenset(cell.parts) for cell in hom.cells}
    report["facets_are_full_paths"] = hom_cells == path_cells
    report["facet_count"] = len(hom_cells)
    report["ordered_facet_count"] = len(hom.cells)
    ihom = build_hom(complete_graph(r), s_graph, MODE_IHOM)
    report["induced_equals_plain"] = {c.parts for c in ihom.cells} == {
        c.parts for c in hom.cells
    }

    mapping = embed_staircase(k, m, r, s)
    diagonals = allowable_diagonals(k, m)
    diag_idx = {d: i for i, d in enumerate(diagonals)}
    d_plus = build_D_plus(k, m)
    embedded_facets = [
        frozenset(diag_idx[mapping[p]] for p in path) for path in paths
    ]
    report["triangulation_in_d_plus"] = all(
        has_face(d_plus, f) for f in embedded_facets
    )

    # the embedded copy: complete-graph complex of the induced graph on the
    # image, which coincides with that of the abstract staircase graph
    image_vertices = [mapping[p] for p in sorted(mapping)]
    ind = build_independence_graph(k, m)
    sub_edges = []
    for a, b in itertools.combinations(range(len(image_vertices)), 2):
        u = diag_idx[image_vertices[a]]
        v = diag_idx[image_vertices[b]]
        if ind.has_edge(u, v):
            sub_edges.append((a, b))
    image_graph = make_graph(len(image_vertices), sub_edges)
    image_hom = build_hom(complete_graph(r), image_graph)
    report["image_cells_match_staircase_cells"] = {
        c.parts for c in image_hom.cells
    } == {c.parts for c in hom.cells}

    # slice of the embedded copy: vertices map to row-count compositions
    verts, edges = low_dimensional_cells(image_graph, r)

    def to_composition(cell):
        counts = [0] * s
        for part in cell.parts:
            for v in part:
                counts[v % s] += 1
        return tuple(counts)

    vertex_comps = {to_composition(t) for t in verts}
    report["slice_vertices_are_compositions"] = vertex_comps == set(
        compositions(r, s)
    )
    graph, comps = composition_graph(r, s)
    comp_idx = {c: i for i, c in enumerate(comps)}
    edge_set = set()
    for t in edges:
        pts = sorted(project_pi(t, image_graph.n).point_set)
        if len(pts) == 2:
            pair = []
            for pt in pts:
                counts = [0] * s
                for v, c in enumerate(pt):
                    counts[v % s] += c
                pair.append(comp_idx[tuple(counts)])
            if pair[0] != pair[1]:
                edge_set.add((min(pair), max(pair)))
    report["slice_skeleton_is_composition_graph"] = edge_set == set(
        (min(u, v), max(u, v)) for u, v in graph.edges
    )

    if r == m - 1:
        from homplex.complexes import label_tuple

        ok = True
        for cell in image_hom.cells:
            parts = [
                frozenset(diag_idx[image_vertices[v]] for v in part)
                for part in cell.parts
            ]
            if not is_valid_cell(complete_graph(m - 1), ind, label_tuple(parts)):
                ok = False
        report["slice_cells_in_projected_complex"] = ok
    return report
