"""Loopless undirected graphs on dense 0-indexed vertices.

Clique machinery and complete-multipartite cell enumeration live here;
vertex subsets are manipulated as bitmasks internally and exposed as
frozensets.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def degree(self, v: int) -> int:
        return bin(adjacency_masks(self)[v]).count("1")


def make_graph(n: int, edges) -> Graph:
    norm = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        norm.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(norm))


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    return make_graph(
        g.n,
        [e for e in itertools.combinations(range(g.n), 2) if e not in g.edges],
    )


@lru_cache(maxsize=None)
def adjacency_masks(g: Graph) -> tuple[int, ...]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json(data) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    return make_graph(int(data["n"]), [tuple(e) for e in data["edges"]])


_FAMILY_RE = re.compile(r"^([KCES]|I)(\d+)(?:_(\d+))?$")


def graph_from_name(name: str) -> Graph:
    """Parse compact family names: K4, C5, E3, I4_3, S4_3."""
    m = _FAMILY_RE.match(name.strip())
    if not m:
        raise ValueError(f"unrecognized graph family {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if kind in "KCE":
        if b is not None:
            raise ValueError(f"family {kind} takes one parameter: {name!r}")
        return {"K": complete_graph, "C": cycle_graph, "E": empty_graph}[kind](a)
    if b is None:
        raise ValueError(f"family {kind} needs two parameters like {kind}4_3")
    if kind == "I":
        from homplex.dissections import build_independence_graph

        return build_independence_graph(a, int(b))
    from homplex.staircase import staircase_graph

    return staircase_graph(a, int(b))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def clique_number(g: Graph) -> int:
    """Maximum clique size, by branch and bound with a greedy coloring bound."""
    if g.n < 1:
        raise ValueError("empty vertex set")
    adj = adjacency_masks(g)
    best = 1

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy coloring; returns (vertex, color index) in coloring order
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                avail &= ~(1 << v) & ~adj[v]
                rest &= ~(1 << v)
        return order

    def expand(clique_size: int, cand: int):
        nonlocal best
        order = color_bound(cand)
        for v, color in reversed(order):
            if clique_size + color <= best:
                return
            expand(clique_size + 1, cand & adj[v])
            if clique_size + 1 > best:
                best = clique_size + 1
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting."""
    adj = adjacency_masks(g)
    out = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(frozenset(_bits(r)))
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda v: _popcount(p & adj[v]))
        for v in list(_bits(p & ~adj[pivot])):
            bk(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << g.n) - 1, 0)
    return sorted(out, key=sorted)


def max_independent_set_size(g: Graph) -> int:
    return clique_number(complement(g))


def is_complete_bipartite(g: Graph, part_a, part_b) -> bool:
    """True iff every pair (a, b) with a != b across the parts is an edge.

    Vacuously true when either part is empty; equal elements are skipped,
    so overlap does not by itself falsify the test.
    """
    for s in (part_a, part_b):
        for v in s:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
    adj = adjacency_masks(g)
    for a in part_a:
        for b in part_b:
            if a != b and not (adj[a] >> b) & 1:
                return False
    return True


def is_induced_multipartite(g: Graph, parts) -> bool:
    """All cross-part pairs are edges and no intra-part pair is an edge."""
    parts = [frozenset(p) for p in parts]
    for p, q in itertools.combinations(parts, 2):
        if p & q:
            raise ValueError("parts overlap")
    adj = adjacency_masks(g)
    for p, q in itertools.combinations(parts, 2):
        for a in p:
            for b in q:
                if not (adj[a] >> b) & 1:
                    return False
    for p in parts:
        for a, b in itertools.combinations(sorted(p), 2):
            if (adj[a] >> b) & 1:
                return False
    return True


def _submasks(mask: int):
    """Nonempty submasks of a bitmask."""
    s = mask
    while s:
        yield s
        s = (s - 1) & mask


def _common_neighbors(adj, mask: int, universe: int) -> int:
    out = universe
    for v in _bits(mask):
        out &= adj[v]
    return out


def enumerate_multipartite_cells(
    g: Graph, parts: int, induced: bool = False, maximal_only: bool = False
):
    """Ordered tuples of pairwise-disjoint nonempty parts, complete bipartite
    across every pair (no intra-part edges when induced=True).

    These are exactly the cells of the complete-graph homomorphism complex
    with `parts` colors; with maximal_only=True, only coordinatewise-maximal
    tuples are produced.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    adj = adjacency_masks(g)
    full = (1 << g.n) - 1
    indep = None
    if induced:
        indep = [full & ~adj[v] for v in range(g.n)]  # v plus its non-neighbors

    out = []

    def part_ok(mask: int) -> bool:
        if not induced:
            return True
        for v in _bits(mask):
            if mask & ~indep[v]:
                return False
        return True

    def grow(chosen: list[int], cand: int):
        if len(chosen) == parts:
            if maximal_only:
                # maximal iff no vertex extends any single part
                for i, part in enumerate(chosen):
                    ext = full & ~sum_masks(chosen)
                    for j, other in enumerate(chosen):
                        if j != i:
                            ext &= _common_neighbors(adj, other, full)
                    if induced:
                        for v in _bits(part):
                            ext &= indep[v]
                    if ext:
                        return
            out.append(tuple(frozenset(_bits(m)) for m in chosen))
            return
        remaining = parts - len(chosen)
        for sub in _submasks(cand):
            if not part_ok(sub):
                continue
            nxt = cand & ~sub & _common_neighbors(adj, sub, full)
            if remaining > 1 and not nxt:
                continue
            grow(chosen + [sub], nxt)

    def sum_masks(masks):
        total = 0
        for m in masks:
            total |= m
        return total

    grow([], full)
    return sorted(out, key=lambda cell: tuple(sorted(p) for p in cell))


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class, by orbit marking.

    Brute force over vertex permutations; intended for n <= 7.
    """
    if n > 7:
        raise ValueError("brute-force isomorphism is limited to n <= 7")
    pairs = list(itertools.combinations(range(n), 2))
    index = {e: i for i, e in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        table = [0] * len(pairs)
        for (u, v), i in index.items():
            a, b = perm[u], perm[v]
            table[i] = index[(a, b) if a < b else (b, a)]
        tables.append(table)
    reps = []
    seen = bytearray(1 << len(pairs))
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        reps.append(mask)
        for table in tables:
            image = 0
            m = mask
            while m:
                b = m & -m
                image |= 1 << table[b.bit_length() - 1]
                m ^= b
            seen[image] = 1
    return [
        make_graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
        for mask in reps
    ]
