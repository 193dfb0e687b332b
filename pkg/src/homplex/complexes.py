"""Abstract simplicial complexes and projected product-of-simplices cells.

A SimplicialComplex is stored by its facets (an antichain); downward
closure is implicit.  ProjectedCell is the image of a labeled cell under
the coordinate-sum projection, kept in unscaled integer coordinates so
that equality and hashing are exact.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass

from homplex.linalg import Circuit, affine_rank, rational_kernel

DEFAULT_FACE_BUDGET = 5_000_000


class BudgetExceededError(RuntimeError):
    """Raised when a face enumeration would exceed the configured budget."""


def face_budget() -> int:
    value = os.environ.get("HOMPLEX_BUDGET")
    return int(value) if value else DEFAULT_FACE_BUDGET


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[frozenset[int], ...]


def simplicial_complex(n: int, faces) -> SimplicialComplex:
    """Build a complex from any face list, keeping only maximal faces."""
    fs = {frozenset(f) for f in faces}
    for f in fs:
        for v in f:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
    maximal = [f for f in fs if not any(f < g for g in fs)]
    return SimplicialComplex(n, tuple(sorted(maximal, key=sorted)))


def full_simplex(n: int) -> SimplicialComplex:
    return simplicial_complex(n, [range(n)]) if n else SimplicialComplex(0, ())


def has_face(k: SimplicialComplex, face) -> bool:
    face = frozenset(face)
    return any(face <= f for f in k.facets)


def faces_by_dim(k: SimplicialComplex, budget: int | None = None) -> list[list[tuple[int, ...]]]:
    """All faces, grouped by dimension, each sorted lexicographically."""
    if budget is None:
        budget = face_budget()
    seen: set[tuple[int, ...]] = set()
    for facet in k.facets:
        verts = sorted(facet)
        for size in range(1, len(verts) + 1):
            for face in itertools.combinations(verts, size):
                seen.add(face)
                if len(seen) > budget:
                    raise BudgetExceededError(
                        f"face count exceeds budget {budget}; raise HOMPLEX_BUDGET to override"
                    )
    top = max((len(f) for f in seen), default=0)
    out: list[list[tuple[int, ...]]] = [[] for _ in range(top)]
    for face in seen:
        out[len(face) - 1].append(face)
    for bucket in out:
        bucket.sort()
    return out


def f_vector(k: SimplicialComplex, budget: int | None = None) -> tuple[int, ...]:
    return tuple(len(bucket) for bucket in faces_by_dim(k, budget))


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** i * c for i, c in enumerate(f_vector(k)))


def skeleton(k: SimplicialComplex, dim: int) -> SimplicialComplex:
    """Faces of dimension <= dim."""
    if dim < 0:
        raise ValueError("dimension must be >= 0")
    faces = []
    for facet in k.facets:
        if len(facet) - 1 <= dim:
            faces.append(facet)
        else:
            faces.extend(itertools.combinations(sorted(facet), dim + 1))
    return simplicial_complex(k.n, faces)


def complex_to_json(k: SimplicialComplex) -> dict:
    return {"n": k.n, "facets": [sorted(f) for f in k.facets]}


def complex_from_json(data) -> SimplicialComplex:
    if isinstance(data, str):
        data = json.loads(data)
    return simplicial_complex(int(data["n"]), data["facets"])


# ---------------------------------------------------------------------------
# labeled cells


HOM = "hom"
HOM_PLUS = "hom_plus"


@dataclass(frozen=True)
class LabelTuple:
    """An ordered tuple of vertex subsets of the target graph.

    In "hom" mode every part must be nonempty (product-type cells); in
    "hom_plus" mode empty parts are allowed (join-type simplices).
    """

    parts: tuple[frozenset[int], ...]
    mode: str = HOM

    def __post_init__(self):
        if self.mode not in (HOM, HOM_PLUS):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == HOM and any(not p for p in self.parts):
            raise ValueError("hom-mode cells need nonempty parts")


def label_tuple(parts, mode: str = HOM) -> LabelTuple:
    return LabelTuple(tuple(frozenset(p) for p in parts), mode)


def cell_dimension(t: LabelTuple) -> int:
    """Product dimension in hom mode, join (simplex) dimension in plus mode."""
    total = sum(len(p) for p in t.parts)
    if t.mode == HOM:
        return total - len(t.parts)
    return total - 1


def faces_of_cell(t: LabelTuple):
    """All faces of a labeled cell, in its own mode.

    hom: tuples of nonempty subsets of each part; hom_plus: tuples of
    arbitrary subsets, except the all-empty tuple.
    """
    if t.mode == HOM:
        options = [
            [frozenset(c) for size in range(1, len(p) + 1) for c in itertools.combinations(sorted(p), size)]
            for p in t.parts
        ]
        for combo in itertools.product(*options):
            yield LabelTuple(combo, HOM)
        return
    options = [
        [frozenset(c) for size in range(0, len(p) + 1) for c in itertools.combinations(sorted(p), size)]
        for p in t.parts
    ]
    for combo in itertools.product(*options):
        if any(combo):
            yield LabelTuple(combo, HOM_PLUS)


@dataclass(frozen=True)
class ProjectedCell:
    """Image of a labeled cell under the coordinate-sum projection.

    parts: the unordered part system in canonical form (sorted by minimal
    element).  points: the unscaled integer image of every choice tuple,
    with multiplicity.  When the parts are pairwise disjoint every point is
    0/1 with exactly len(parts) ones and all points are hull vertices.
    """

    h: int
    parts: tuple[tuple[int, ...], ...]
    points: tuple[tuple[int, ...], ...]

    @property
    def point_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.points)

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "points": [list(p) for p in self.points]}


def canonical_parts(parts) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(p)) for p in parts), key=lambda p: (p[0], p)))


def projected_cell(h: int, parts) -> ProjectedCell:
    parts = [frozenset(p) for p in parts]
    if any(not p for p in parts):
        raise ValueError("projection needs nonempty parts")
    points = []
    for choice in itertools.product(*(sorted(p) for p in parts)):
        vec = [0] * h
        for v in choice:
            vec[v] += 1
        points.append(tuple(vec))
    return ProjectedCell(h, canonical_parts(parts), tuple(sorted(points)))


def cell_intersection(p: ProjectedCell, q: ProjectedCell):
    """Intersection of two disjoint-parts cells via part matching.

    When a permutation matches every part of p to a part of q with
    nonempty intersection, the intersection of the cells is the cell of
    the pairwise part intersections; with no such permutation the cells
    do not meet in a face and None is returned.  When the parts carry the
    usual clique structure the matching is unique; an ambiguous matching
    is rejected loudly.
    """
    if len(p.parts) != len(q.parts):
        raise ValueError("cells have different part counts")
    found = None
    for perm in itertools.permutations(range(len(q.parts))):
        if all(set(part) & set(q.parts[j]) for part, j in zip(p.parts, perm)):
            if found is not None:
                raise ValueError("ambiguous part matching")
            found = perm
    if found is None:
        return None
    parts = [set(part) & set(q.parts[j]) for part, j in zip(p.parts, found)]
    return projected_cell(p.h, parts)


def projected_faces(cell: ProjectedCell):
    """Faces of a projected cell: one per choice of nonempty part subsets."""
    options = [
        [tuple(c) for size in range(1, len(p) + 1) for c in itertools.combinations(p, size)]
        for p in cell.parts
    ]
    seen = set()
    for combo in itertools.product(*options):
        sub = projected_cell(cell.h, combo)
        if sub not in seen:
            seen.add(sub)
            yield sub


# ---------------------------------------------------------------------------
# common-face test


@dataclass(frozen=True)
class BadPair:
    i: int
    j: int
    circuit: Circuit
    points: tuple[tuple[int, ...], ...]  # the circuit indexes into this list


def _kernel_circuit(points, support):
    dim = len(points[0])
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


def _face_keys(cell: ProjectedCell) -> set[frozenset[tuple[int, ...]]]:
    return {f.point_set for f in projected_faces(cell)}


def bad_circuit_for_pair(p: ProjectedCell, q: ProjectedCell):
    """A witnessing circuit for a bad intersection of two cells, or None.

    The pair intersects badly iff some circuit among the union of their
    vertex points has its positive support inside one cell, its negative
    support inside the other, and is not carried by a common face.
    """
    if p.h != q.h:
        raise ValueError("cells live in different ambient dimensions")
    points = sorted(p.point_set | q.point_set)
    index = {pt: i for i, pt in enumerate(points)}
    in_p = frozenset(index[pt] for pt in p.point_set)
    in_q = frozenset(index[pt] for pt in q.point_set)
    common = _face_keys(p) & _face_keys(q)
    common_idx = [frozenset(index[pt] for pt in key) for key in common]
    rank = affine_rank(points)
    n = len(points)
    for size in range(3, min(n, rank + 2) + 1):
        for support in itertools.combinations(range(n), size):
            circuit = _kernel_circuit(points, support)
            if circuit is None:
                continue
            pos, neg = circuit.positive_support, circuit.negative_support
            separated = (pos <= in_p and neg <= in_q) or (pos <= in_q and neg <= in_p)
            if not separated:
                continue
            supp = circuit.support
            if not any(supp <= face for face in common_idx):
                return circuit, tuple(points)
    return None


def common_face_test(cells) -> BadPair | None:
    """None when every pair of cells meets in a common face; otherwise the
    first bad pair with its circuit witness."""
    cells = list(cells)
    for i, j in itertools.combinations(range(len(cells)), 2):
        found = bad_circuit_for_pair(cells[i], cells[j])
        if found is not None:
            circuit, points = found
            return BadPair(i, j, circuit, points)
    return None
