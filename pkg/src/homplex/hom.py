"""Homomorphism complexes of graph pairs and their canonical geometry.

Cells of the complex for (G, H) are tuples of vertex subsets of H indexed
by the vertices of G; across every edge of G the two parts must be
disjoint and completely joined in H (loopless H forces the disjointness).
The join-type embedding lives in R^(g*h) x R^g with the h-blocks first,
the morphing-plane slice produces the product-type cells, and composing
the block-sum projection with the tail projection lands everything in
R^h.  All coordinates are exact rationals; projected cells are kept in
g-times-inflated integer form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from homplex.complexes import (
    HOM,
    HOM_PLUS,
    LabelTuple,
    ProjectedCell,
    cell_dimension,
    common_face_test,
    faces_of_cell,
    label_tuple,
    projected_cell,
)
from homplex.graphs import Graph, adjacency_masks, clique_number
from homplex.linalg import hull_vertex_flags, point_in_hull, solve_unique

MODE_HOM = "hom"
MODE_HOM_PLUS = "hom_plus"
MODE_HOM_PLUS_T = "hom_plus_transversal"
MODE_IHOM = "ihom"
MODE_IHOM_PLUS = "ihom_plus"

MODES = (MODE_HOM, MODE_HOM_PLUS, MODE_HOM_PLUS_T, MODE_IHOM, MODE_IHOM_PLUS)


@dataclass(frozen=True)
class HomComplex:
    G: Graph
    H: Graph
    mode: str
    cells: tuple[LabelTuple, ...]  # maximal cells

    def to_json(self) -> dict:
        from homplex.graphs import graph_to_json

        return {
            "G": graph_to_json(self.G),
            "H": graph_to_json(self.H),
            "mode": self.mode,
            "cells": [[sorted(p) for p in cell.parts] for cell in self.cells],
        }


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _submasks(mask: int):
    s = mask
    while s:
        yield s
        s = (s - 1) & mask


def _edge_ok(adj, a_mask: int, b_mask: int, induced: bool, indep) -> bool:
    """Validity of one G-edge: disjoint parts, completely joined in H, and
    (induced mode) no H-edge inside either part."""
    if a_mask & b_mask:
        return False
    for v in _bits(a_mask):
        if b_mask & ~adj[v]:
            return False
    if induced:
        for mask in (a_mask, b_mask):
            for v in _bits(mask):
                if mask & ~indep[v]:
                    return False
    return True


def _maximal_assignments(G: Graph, H: Graph, induced: bool):
    """Maximal valid part assignments for all vertices of G (bitmasks).

    A cell is maximal iff no single vertex of H can be added to any single
    part, so maximality is a per-part closure condition.  Enumeration
    factors over connected components of G; parts of isolated vertices are
    the whole vertex set of H.
    """
    adj = adjacency_masks(H)
    g_adj = adjacency_masks(G)
    full = (1 << H.n) - 1
    indep = [full & ~adj[v] for v in range(H.n)]

    # connected components of G, BFS-ordered so each later vertex sees an
    # earlier neighbor
    seen = [False] * G.n
    components = []
    for start in range(G.n):
        if seen[start]:
            continue
        order = [start]
        seen[start] = True
        head = 0
        while head < len(order):
            for w in _bits(g_adj[order[head]]):
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
            head += 1
        components.append(order)

    def component_cells(order):
        if len(order) == 1:
            return [{order[0]: full}] if H.n else []
        results = []

        def candidates(assign, x):
            cand = full
            for y in _bits(g_adj[x]):
                if y in assign:
                    mask = assign[y]
                    cand &= ~mask
                    for v in _bits(mask):
                        cand &= adj[v]
            return cand

        def closure_fixed(assign):
            for x, mask in assign.items():
                ext = candidates(assign, x) & ~mask
                if induced:
                    for v in _bits(mask):
                        ext &= indep[v]
                if ext:
                    return False
            return True

        def grow(pos, assign):
            if pos == len(order):
                if closure_fixed(assign):
                    results.append(dict(assign))
                return
            x = order[pos]
            cand = candidates(assign, x)
            for sub in _submasks(cand):
                if induced and any(sub & ~indep[v] for v in _bits(sub)):
                    continue
                ok = all(
                    _edge_ok(adj, sub, assign[y], induced, indep)
                    for y in _bits(g_adj[x])
                    if y in assign
                )
                if ok:
                    assign[x] = sub
                    grow(pos + 1, assign)
                    del assign[x]

        grow(0, {})
        return results

    pieces = [component_cells(order) for order in components]
    cells = []
    for combo in itertools.product(*pieces):
        assign = {}
        for piece in combo:
            assign.update(piece)
        cells.append(tuple(assign[x] for x in range(G.n)))
    return cells


def _plus_maximal(G: Graph, H: Graph, induced: bool):
    """Maximal cells when empty parts are allowed.

    Cells with support S are exactly the cells of the induced subgraph of G
    on S; a cell is maximal when each part is closed and no empty part can
    be made nonempty.
    """
    adj = adjacency_masks(H)
    g_adj = adjacency_masks(G)
    full = (1 << H.n) - 1
    indep = [full & ~adj[v] for v in range(H.n)]
    from homplex.graphs import make_graph

    out = []
    for support in range(1, 1 << G.n):
        s_verts = list(_bits(support))
        pos_of = {x: i for i, x in enumerate(s_verts)}
        sub_edges = [
            (pos_of[u], pos_of[v])
            for u, v in G.edges
            if u in pos_of and v in pos_of
        ]
        sub_g = make_graph(len(s_verts), sub_edges)
        for masks in _maximal_assignments(sub_g, H, induced):
            cell = [0] * G.n
            for x, m in zip(s_verts, masks):
                cell[x] = m
            # a vertex outside the support must not be assignable at all
            extendable = False
            for x in range(G.n):
                if (support >> x) & 1:
                    continue
                cand = full
                for y in _bits(g_adj[x]):
                    if (support >> y) & 1:
                        cand &= ~cell[y]
                        for v in _bits(cell[y]):
                            cand &= adj[v]
                if cand:
                    extendable = True
                    break
            if not extendable:
                out.append(tuple(cell))
    # drop cells dominated componentwise by another
    out = sorted(set(out))
    keep = []
    for cell in out:
        if not any(
            other != cell and all((a | b) == b for a, b in zip(cell, other))
            for other in out
        ):
            keep.append(cell)
    return keep


def build_hom(G: Graph, H: Graph, mode: str = MODE_HOM) -> HomComplex:
    """The homomorphism complex of (G, H) in the requested mode, as its
    list of maximal cells."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    induced = mode in (MODE_IHOM, MODE_IHOM_PLUS)
    if mode in (MODE_HOM, MODE_IHOM, MODE_HOM_PLUS_T):
        masks = _maximal_assignments(G, H, induced)
        tuple_mode = HOM
    else:
        masks = _plus_maximal(G, H, induced)
        tuple_mode = HOM_PLUS
    cells = sorted(
        (
            LabelTuple(tuple(frozenset(_bits(m)) for m in cell), tuple_mode)
            for cell in masks
        ),
        key=lambda c: tuple(sorted(p) for p in c.parts),
    )
    return HomComplex(G, H, mode, tuple(cells))


def all_cells(complex_: HomComplex) -> list[LabelTuple]:
    seen = set()
    for cell in complex_.cells:
        for face in faces_of_cell(cell):
            seen.add(face)
    return sorted(seen, key=lambda c: (cell_dimension(c), tuple(sorted(p) for p in c.parts)))


def hom_f_vector(complex_: HomComplex) -> tuple[int, ...]:
    """Cell counts by dimension (product dimension for hom-type modes,
    simplex dimension for plus modes)."""
    counts: dict[int, int] = {}
    for cell in all_cells(complex_):
        d = cell_dimension(cell)
        counts[d] = counts.get(d, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(d, 0) for d in range(max(counts) + 1))


def join_model(complex_: HomComplex):
    """The simplicial homotopy model of a hom complex: one vertex (i, v)
    per choice of position and target vertex, one simplex per cell (the
    union of its parts, kept position-tagged, so no folding occurs)."""
    from homplex.complexes import simplicial_complex

    h = complex_.H.n
    g = complex_.G.n
    facets = []
    for cell in complex_.cells:
        facets.append(
            frozenset(i * h + v for i, part in enumerate(cell.parts) for v in part)
        )
    return simplicial_complex(g * h, facets)


def is_valid_cell(G: Graph, H: Graph, t: LabelTuple, induced: bool = False) -> bool:
    adj = adjacency_masks(H)
    full = (1 << H.n) - 1
    indep = [full & ~adj[v] for v in range(H.n)]
    masks = [sum(1 << v for v in p) for p in t.parts]
    if len(masks) != G.n:
        return False
    for u, v in G.edges:
        if masks[u] and masks[v] and not _edge_ok(adj, masks[u], masks[v], induced, indep):
            return False
    return True


# ---------------------------------------------------------------------------
# geometry: the join embedding, the morphing-plane slice, and projections


def join_vertices(t: LabelTuple, h: int) -> list[tuple[int, ...]]:
    """Vertices of the join-type simplex of a cell in R^(g*h) x R^g:
    block i holds the indicator of a vertex of part i, the tail marks i."""
    g = len(t.parts)
    out = []
    for i, part in enumerate(t.parts):
        for v in sorted(part):
            vec = [0] * (g * h + g)
            vec[i * h + v] = 1
            vec[g * h + i] = 1
            out.append(tuple(vec))
    return out


def cayley_slice(t: LabelTuple, h: int) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of the morphing-plane slice of a cell's join simplex.

    One vertex per choice of one part vertex each: (1/g) times the sum of
    the block indicators, with constant tail (1/g, ..., 1/g).  Cells with
    an empty part do not meet the plane and are refused.
    """
    g = len(t.parts)
    if any(not p for p in t.parts):
        raise ValueError("cell with an empty part does not meet the slice plane")
    weight = Fraction(1, g)
    out = []
    for choice in itertools.product(*(sorted(p) for p in t.parts)):
        vec = [Fraction(0)] * (g * h + g)
        for i, v in enumerate(choice):
            vec[i * h + v] += weight
            vec[g * h + i] = weight
        out.append(tuple(vec))
    return tuple(sorted(out))


def pi_square(point, g: int, h: int) -> tuple:
    """Block-sum projection R^(g*h) x R^g -> R^h x R^g."""
    if len(point) != g * h + g:
        raise ValueError("point has wrong dimension")
    head = [sum(point[i * h + c] for i in range(g)) for c in range(h)]
    return tuple(head) + tuple(point[g * h :])


def pi_delta(point, h: int) -> tuple:
    """Drop the g-dimensional tail."""
    return tuple(point[:h])


def project_pi(t: LabelTuple, h: int) -> ProjectedCell:
    """The full projection of a cell, in unscaled integer coordinates."""
    return projected_cell(h, t.parts)


def slice_describing_points(points, tail: int, value: Fraction, use_fast_path: bool = True):
    """Points describing conv(points) cut by {last `tail` coords == value}.

    Generic exact slice: solve the affine system on small point subsets and
    keep unique strictly-positive solutions.  Subsets that miss a tail
    constraint are provably infeasible and skipped.  The output contains
    every vertex of the sliced polytope and nothing outside it; when the
    input points are affinely independent (a simplex) it is exactly the
    vertex set.
    """
    pts = [tuple(Fraction(c) for c in p) for p in points]
    dim = len(pts[0])
    head = dim - tail
    nonzero_tails = [frozenset(i for i in range(tail) if p[head + i]) for p in pts]

    # structural fast path: every point marks exactly one tail coordinate
    # with a 1 and tail * value = 1.  Then a subset is feasible iff it has
    # exactly one point per tail block (a doubled block makes the system
    # rank-deficient, a missing block makes it inconsistent), and the
    # unique solution is the constant `value`.
    if use_fast_path and tail * value == 1 and all(
        len(nz) == 1 and pts[i][head + next(iter(nz))] == 1
        for i, nz in enumerate(nonzero_tails)
    ):
        blocks = [[] for _ in range(tail)]
        for i, nz in enumerate(nonzero_tails):
            blocks[next(iter(nz))].append(i)
        if any(not b for b in blocks):
            return set()
        return {
            tuple(value * sum(pts[i][c] for i in choice) for c in range(dim))
            for choice in itertools.product(*blocks)
        }

    candidates = set()
    for size in range(1, tail + 2):
        for sub in itertools.combinations(range(len(pts)), size):
            covered = frozenset().union(*(nonzero_tails[i] for i in sub))
            if covered != frozenset(range(tail)):
                continue
            mat = [[pts[i][head + c] for i in sub] for c in range(tail)]
            mat.append([1] * size)
            sol = solve_unique(mat, [value] * tail + [1])
            if sol is None or any(x <= 0 for x in sol):
                continue
            point = tuple(
                sum(sol[k] * pts[i][c] for k, i in enumerate(sub)) for c in range(dim)
            )
            candidates.add(point)
    return candidates


def check_slice_identity(G: Graph, H: Graph) -> bool:
    """The morphing-plane slice of every maximal transversal join cell
    equals the product-vertex formula, both computed independently.

    The join cell is a simplex, so the generic slice returns its exact
    vertex set.
    """
    hom = build_hom(G, H, MODE_HOM)
    for cell in hom.cells:
        formula = set(cayley_slice(cell, H.n))
        geometric = slice_describing_points(
            join_vertices(cell, H.n), len(cell.parts), Fraction(1, len(cell.parts))
        )
        if formula != geometric:
            return False
    return True


def check_diagram_commutativity(G: Graph, H: Graph) -> bool:
    """Block-sum projection commutes with slicing on every maximal cell:
    projecting the sliced join simplex describes the same polytope as
    slicing the projected one (exact mutual hull containment)."""
    h = H.n
    hom = build_hom(G, H, MODE_HOM)
    for cell in hom.cells:
        g = len(cell.parts)
        left = {pi_square(p, g, h) for p in cayley_slice(cell, h)}
        projected = [pi_square(p, g, h) for p in join_vertices(cell, h)]
        right = slice_describing_points(projected, g, Fraction(1, g))
        if left != right:
            # both sets describe convex bodies; fall back to exact mutual
            # containment on the symmetric difference
            lhull, rhull = sorted(left), sorted(right)
            if not all(point_in_hull(p, rhull) for p in left - right):
                return False
            if not all(point_in_hull(p, lhull) for p in right - left):
                return False
    return True


def check_projection_immersion(H: Graph, g: int) -> bool:
    """For complete G, no cell loses dimension under the block-sum
    projection: distinct join vertices stay distinct."""
    from homplex.graphs import complete_graph

    hom = build_hom(complete_graph(g), H, MODE_HOM)
    for cell in hom.cells:
        for face in faces_of_cell(cell):
            verts = join_vertices(face, H.n)
            images = {pi_square(p, g, H.n) for p in verts}
            if len(images) != len(verts):
                return False
    return True


# ---------------------------------------------------------------------------
# projected complexes and polytopality


def projected_complex(G: Graph, H: Graph, mode: str = MODE_HOM) -> list[ProjectedCell]:
    """Projected maximal cells, deduplicated on geometry (point sets).

    hom/ihom modes project product-type cells (choice-sum points); the plus
    modes project join-type simplices, whose images are simplices on the
    union of the parts.  Plus/transversal modes require G complete; the
    projection of the plain plus complex is the full simplex on V(H), which
    is produced honestly.
    """
    if mode in (MODE_HOM_PLUS, MODE_HOM_PLUS_T, MODE_IHOM_PLUS):
        if H.n and G.n > 1 and G.edges != frozenset(
            itertools.combinations(range(G.n), 2)
        ):
            raise ValueError("plus-mode projections are defined for complete G")
    hom = build_hom(G, H, mode)
    out: dict[frozenset, ProjectedCell] = {}
    if mode in (MODE_HOM, MODE_IHOM):
        for cell in hom.cells:
            pc = project_pi(cell, H.n)
            out.setdefault(pc.point_set, pc)
    else:
        for cell in hom.cells:
            union = frozenset().union(*cell.parts)
            pc = projected_cell(H.n, [union])
            out.setdefault(pc.point_set, pc)
        for key in [k for k in out if any(k < other for other in out)]:
            del out[key]  # unions of distinct maximal cells may nest
    return sorted(out.values(), key=lambda c: c.parts)


@dataclass(frozen=True)
class PolytopalityResult:
    empty: bool
    criterion: bool | None
    geometric: bool | None
    cells_ok: bool | None
    embedding_ok: bool | None
    witness: object

    @property
    def verdict(self):
        if self.empty:
            return "empty"
        return self.criterion


def simplicial_projection_embeds(H: Graph, g: int) -> bool:
    """Whether the join-type projection is one-to-one on cells: no vertex
    set carries two distinct complete g-partite part systems.

    A collision makes two different simplicial cells share their image
    simplex, so the projected join complex is not a complex even when the
    product-type cells pairwise meet in common faces.
    """
    adj = adjacency_masks(H)
    for size in range(g, H.n + 1):
        for vertex_set in itertools.combinations(range(H.n), size):
            count = 0

            def assign(i, parts):
                nonlocal count
                if count > 1:
                    return
                if i == len(vertex_set):
                    if len(parts) == g:
                        count += 1
                    return
                x = vertex_set[i]
                for pi in range(len(parts)):
                    if all(
                        all((adj[x] >> y) & 1 for y in q)
                        for qi, q in enumerate(parts)
                        if qi != pi
                    ):
                        parts[pi].append(x)
                        assign(i + 1, parts)
                        parts[pi].pop()
                if len(parts) < g and all(
                    all((adj[x] >> y) & 1 for y in q) for q in parts
                ):
                    parts.append([x])
                    assign(i + 1, parts)
                    parts.pop()

            assign(0, [])
            if count > 1:
                return False
    return True


def is_projection_polytopal(H: Graph, g: int, method: str = "both") -> PolytopalityResult:
    """Whether the projected complete-graph complexes are genuine complexes.

    criterion: clique number equals g.  geometric: every pair of maximal
    projected product cells meets in a common face AND the join-type
    projection embeds (distinct part systems keep distinct simplices).
    Both halves are needed: for H with clique number g+1 the product cells
    can be too low-dimensional to intersect badly (e.g. a triangle with
    g = 2 projects to the boundary of a triangle), while the simplicial
    side always collapses two partitions of a (g+1)-clique.  With
    method="both" the two verdicts must agree or an AssertionError is
    raised.
    """
    from homplex.graphs import complete_graph

    w = clique_number(H)
    if w < g:
        return PolytopalityResult(True, None, None, None, None, None)
    criterion = w == g
    geometric = cells_ok = embedding_ok = None
    witness = None
    if method in ("geometric", "both"):
        cells = projected_complex(complete_graph(g), H, MODE_HOM)
        bad = common_face_test(cells)
        cells_ok = bad is None
        witness = bad
        embedding_ok = simplicial_projection_embeds(H, g)
        geometric = cells_ok and embedding_ok
    if method == "criterion":
        return PolytopalityResult(False, criterion, None, None, None, None)
    if method == "both" and criterion != geometric:
        raise AssertionError(
            f"criterion ({criterion}) and geometric oracle ({geometric}) disagree"
        )
    return PolytopalityResult(False, criterion, geometric, cells_ok, embedding_ok, witness)


def low_dimensional_cells(H: Graph, g: int):
    """Vertices and edges of the complete-graph complex, cheaply.

    Vertices are ordered g-cliques; edges have one doubled position.
    """
    adj = adjacency_masks(H)
    verts = []
    edges = []

    def cliques(prefix, cand, size):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for v in _bits(cand):
            prefix.append(v)
            yield from cliques(prefix, cand & adj[v] & ~((1 << (v + 1)) - 1), size)
            prefix.pop()

    full = (1 << H.n) - 1
    for clique in cliques([], full, g):
        for perm in itertools.permutations(clique):
            verts.append(label_tuple([{v} for v in perm]))
    for clique in cliques([], full, g - 1) if g >= 1 else []:
        base = 0
        for v in clique:
            base |= 1 << v
        cand = full & ~base
        for v in clique:
            cand &= adj[v]
        # the doubled part needs no internal adjacency
        for a, b in itertools.combinations(sorted(_bits(cand)), 2):
            for perm in itertools.permutations(clique):
                for pos in range(g):
                    parts = [{x} for x in perm]
                    parts.insert(pos, {a, b})
                    edges.append(label_tuple(parts))
    return verts, edges


def hypersimplex_skeleton_check(H: Graph, g: int) -> bool:
    """Projected vertices are 0/1 with exactly g ones; projected edges join
    points at Hamming distance two."""
    verts, edges = low_dimensional_cells(H, g)
    for t in verts:
        for p in project_pi(t, H.n).point_set:
            if any(c not in (0, 1) for c in p) or sum(p) != g:
                return False
    for t in edges:
        pc = project_pi(t, H.n)
        pts = sorted(pc.point_set)
        if len(pts) != 2:
            return False
        if sum(a != b for a, b in zip(*pts)) != 2:
            return False
        for p in pts:
            if any(c not in (0, 1) for c in p) or sum(p) != g:
                return False
    return True


# ---------------------------------------------------------------------------
# generalized permutohedra


def minkowski_vertices(parts, weights, h: int):
    """Points of the weighted Minkowski sum of coordinate simplices, each
    flagged as hull vertex or interior (exact).

    Returns a list of (point, is_vertex) with rational coordinates.
    """
    parts = [sorted(set(p)) for p in parts]
    if any(not p for p in parts):
        raise ValueError("empty part")
    weights = [Fraction(w) for w in weights]
    if len(weights) != len(parts):
        raise ValueError("one weight per part required")
    if sum(weights) != 1:
        raise ValueError("weights must sum to 1")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    points = []
    for choice in itertools.product(*parts):
        vec = [Fraction(0)] * h
        for w, v in zip(weights, choice):
            vec[v] += w
        points.append(tuple(vec))
    flags = hull_vertex_flags(points)
    return sorted(set(zip(points, flags)))


@dataclass(frozen=True)
class BipartiteSpec:
    """A bipartite graph with `left` and `right` vertex counts; edges are
    (left index, right index) pairs."""

    left: int
    right: int
    edges: frozenset[tuple[int, int]]

    def neighborhoods(self) -> list[frozenset[int]]:
        out = [set() for _ in range(self.left)]
        for i, j in self.edges:
            if not (0 <= i < self.left and 0 <= j < self.right):
                raise ValueError(f"edge ({i},{j}) out of range")
            out[i].add(j)
        return [frozenset(s) for s in out]


def permutohedron_to_hom(spec: BipartiteSpec):
    """Graphs and a cell whose projection realizes the generalized
    permutohedron of a bipartite graph.

    Left parts that are pairwise disjoint become edges of the source graph;
    the target graph joins their supports completely across such pairs.
    """
    from homplex.graphs import make_graph

    hoods = spec.neighborhoods()
    if any(not s for s in hoods):
        raise ValueError("isolated left vertex")
    m = spec.left
    g_edges = [
        (i, j)
        for i, j in itertools.combinations(range(m), 2)
        if not hoods[i] & hoods[j]
    ]
    source = make_graph(m, g_edges)
    h_edges = set()
    for i, j in g_edges:
        for a in hoods[i]:
            for b in hoods[j]:
                h_edges.add((a, b) if a < b else (b, a))
    target = make_graph(spec.right, h_edges)
    cell = label_tuple(hoods)
    if not is_valid_cell(source, target, cell):
        raise AssertionError("constructed cell is not valid in its complex")
    return source, target, cell
