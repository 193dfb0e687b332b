"""Reduced integer simplicial homology via boundary matrices and SNF.

Faces are enumerated from the facet list within a configurable budget;
boundary matrices use the standard alternating signs over sorted vertex
lists, and the augmentation map makes everything reduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from homplex.complexes import SimplicialComplex, faces_by_dim
from homplex.linalg import smith_normal_form


@dataclass(frozen=True)
class ChainComplexData:
    faces: tuple[tuple[tuple[int, ...], ...], ...]  # faces[d] = sorted d-faces
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]  # boundaries[d] maps C_d -> C_(d-1)


def boundary_matrices(k: SimplicialComplex, budget: int | None = None) -> ChainComplexData:
    """Faces by dimension and all boundary matrices, including the
    augmentation row mapping vertices to the empty face."""
    buckets = faces_by_dim(k, budget)
    index = [{face: i for i, face in enumerate(bucket)} for bucket in buckets]
    boundaries = []
    for d, bucket in enumerate(buckets):
        if d == 0:
            boundaries.append(tuple((1,) * len(bucket) for _ in range(1)) if bucket else ((),))
            continue
        rows = len(buckets[d - 1])
        mat = [[0] * len(bucket) for _ in range(rows)]
        for col, face in enumerate(bucket):
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1 :]
                mat[index[d - 1][sub]][col] = (-1) ** pos
        boundaries.append(tuple(tuple(row) for row in mat))
    return ChainComplexData(
        tuple(tuple(b) for b in buckets), tuple(boundaries)
    )


def _rank(mat) -> int:
    rows = [r for r in mat if any(r)]
    if not rows:
        return 0
    return len(smith_normal_form(rows))


def reduced_homology(k: SimplicialComplex, budget: int | None = None) -> list[tuple[int, list[int]]]:
    """Per dimension d: (free rank of H~_d, torsion invariant factors > 1)."""
    if not k.facets:
        raise ValueError("empty complex has no homology")
    data = boundary_matrices(k, budget)
    dims = len(data.faces)
    out = []
    for d in range(dims):
        cols = len(data.faces[d])
        rank_d = _rank(data.boundaries[d])
        if d + 1 < dims:
            nxt = data.boundaries[d + 1]
            factors = smith_normal_form([list(r) for r in nxt]) if nxt else []
        else:
            factors = []
        rank_next = len(factors)
        out.append((cols - rank_d - rank_next, [f for f in factors if f > 1]))
    return out


def homology_report(k: SimplicialComplex, budget: int | None = None) -> dict:
    groups = reduced_homology(k, budget)
    return {
        "dims": [
            {"d": d, "rank": rank, "torsion": torsion}
            for d, (rank, torsion) in enumerate(groups)
        ]
    }


def betti_numbers(k: SimplicialComplex, budget: int | None = None) -> list[int]:
    return [rank for rank, _ in reduced_homology(k, budget)]


def check_boundary_squares_to_zero(data: ChainComplexData) -> bool:
    for d in range(1, len(data.boundaries)):
        upper = data.boundaries[d]
        lower = data.boundaries[d - 1]
        if not upper or not upper[0]:
            continue
        rows = len(lower)
        mid = len(upper)
        cols = len(upper[0])
        for i in range(rows):
            for j in range(cols):
                if sum(lower[i][t] * upper[t][j] for t in range(mid)) != 0:
                    return False
    return True
