"""Cyclic polytope combinatorics: Gale evenness, lower facets, and the
hole-size bijection with weak compositions.

Everything is index-set combinatorics on [n] = {1, ..., n}; no moment
curve coordinates are needed.  Lower facets of an even-dimensional cyclic
polytope are exactly the disjoint unions of adjacent index pairs, and
recording their gap sizes gives a weak composition of n - d.
"""

from __future__ import annotations

import itertools

from homplex.graphs import Graph, make_graph

IndexSet = frozenset[int]


def _blocks(indices) -> list[list[int]]:
    blocks = []
    for i in sorted(indices):
        if blocks and blocks[-1][-1] == i - 1:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return blocks


def is_gale_facet(indices, n: int, d: int) -> bool:
    """Gale's evenness criterion for a d-subset of [n]: between any two
    non-members the number of members is even, i.e. every block not
    touching 1 or n has even size."""
    idx = set(indices)
    if len(idx) != d or not idx <= set(range(1, n + 1)):
        return False
    for block in _blocks(idx):
        if block[0] != 1 and block[-1] != n and len(block) % 2:
            return False
    return True


def facets(n: int, d: int) -> list[IndexSet]:
    if not n >= d >= 2:
        raise ValueError("need n >= d >= 2")
    return [
        frozenset(c)
        for c in itertools.combinations(range(1, n + 1), d)
        if is_gale_facet(c, n, d)
    ]


def end_set(indices) -> list[int]:
    """The last block of contiguous elements (empty for the empty set)."""
    blocks = _blocks(indices)
    return blocks[-1] if blocks else []


def is_lower_facet(indices, n: int, d: int) -> bool:
    return is_gale_facet(indices, n, d) and len(end_set(indices)) % 2 == 0


def lower_facets(n: int, d: int) -> list[IndexSet]:
    return [f for f in facets(n, d) if len(end_set(f)) % 2 == 0]


def is_cyclic_face(indices, n: int, d: int) -> bool:
    """A set indexes a face iff it is contained in some facet (the empty
    set is the empty face)."""
    idx = frozenset(indices)
    if not idx:
        return True
    return any(idx <= f for f in facets(n, d))


def _paired_starts(indices, n: int) -> list[int]:
    """Starts i_1 < ... < i_{d/2} of the adjacent pairs {i_j, i_j + 1}
    making up a lower facet; raises if the set is not of that shape."""
    blocks = _blocks(indices)
    if any(len(b) % 2 for b in blocks):
        raise ValueError(f"{sorted(indices)} is not a lower facet of C_d({n})")
    starts = []
    for block in blocks:
        starts.extend(block[0] + 2 * t for t in range(len(block) // 2))
    return starts


def chi(indices, n: int) -> tuple[int, ...]:
    """Hole sizes of a lower facet: with sentinels i_0 = -1 and
    i_(d/2+1) = n + 1, the j-th entry is i_(j+1) - i_j - 2."""
    starts = _paired_starts(indices, n)
    if not is_lower_facet(indices, n, 2 * len(starts)):
        raise ValueError(f"{sorted(indices)} is not a lower facet of C_{2 * len(starts)}({n})")
    bounds = [-1] + starts + [n + 1]
    return tuple(bounds[j + 1] - bounds[j] - 2 for j in range(len(starts) + 1))


def chi_inverse(composition) -> IndexSet:
    """The lower facet whose hole sizes are the given weak composition."""
    comp = list(composition)
    if any(a < 0 for a in comp) or len(comp) < 1:
        raise ValueError("composition entries must be non-negative")
    starts = []
    prev = -1
    for a in comp[:-1]:
        prev = prev + a + 2
        starts.append(prev)
    out = set()
    for i in starts:
        out.update((i, i + 1))
    n = sum(comp) + 2 * len(starts)
    if chi(out, n) != tuple(comp):
        raise AssertionError("hole-size reconstruction failed")
    return frozenset(out)


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All weak compositions of `total` into `parts` ordered summands."""
    if parts < 1 or total < 0:
        raise ValueError("need parts >= 1 and total >= 0")
    out = []
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        comp = []
        prev = -1
        for c in cuts:
            comp.append(c - prev - 1)
            prev = c
        comp.append(total + parts - 2 - prev)
        out.append(tuple(comp))
    return sorted(out)


def composition_adjacent(a, b) -> bool:
    """Adjacent iff they differ by one in exactly two positions joined by
    a (possibly empty) run of zeros."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or sum(a) != sum(b):
        return False
    diff = [i for i in range(len(a)) if a[i] != b[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    if {a[i] - b[i], a[j] - b[j]} != {1, -1}:
        return False
    return all(a[t] == 0 for t in range(i + 1, j))


def composition_graph(total: int, parts: int) -> tuple[Graph, list[tuple[int, ...]]]:
    """The adjacency graph on all weak compositions, with its vertex order."""
    comps = compositions(total, parts)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(comps)), 2)
        if composition_adjacent(comps[i], comps[j])
    ]
    return make_graph(len(comps), edges), comps


def lower_faces(n: int, d: int) -> set[IndexSet]:
    """All faces contained in some lower facet: closure of the lower
    facets under pairwise intersection, plus their subsets filtered to
    faces; here we only need the intersection closure."""
    closure = set(lower_facets(n, d))
    frontier = set(closure)
    while frontier:
        new = set()
        for a in frontier:
            for b in closure:
                c = a & b
                if c and c not in closure and c not in new:
                    new.add(c)
        closure |= new
        frontier = new
    return closure
