"""Verification suites: every structural statement the library encodes,
run as named checks with pass/fail/report/skip statuses.

A suite report carries one entry per check; its exit-code contract is
0 iff no check failed (skipped and report-only entries never fail).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from homplex.complexes import (
    BudgetExceededError,
    common_face_test,
    f_vector,
    label_tuple,
)
from homplex.cyclic import chi, chi_inverse, composition_graph, lower_facets
from homplex.dissections import (
    allowable_diagonals,
    build_D,
    build_D_plus,
    build_independence_graph,
    build_T,
    dimension_of_D,
    dissection_count,
    polygon_dissections,
    polygon_size,
    wedge_rank,
)
from homplex.graphs import (
    clique_number,
    complete_graph,
    make_graph,
    nonisomorphic_graphs,
)
from homplex.hom import (
    build_hom,
    cayley_slice,
    check_diagram_commutativity,
    check_slice_identity,
    hom_f_vector,
    hypersimplex_skeleton_check,
    is_projection_polytopal,
    minkowski_vertices,
    pi_delta,
    pi_square,
    projected_complex,
)
from homplex.homology import reduced_homology
from homplex.staircase import (
    phi,
    psi,
    staircase_embedding_report,
    thm55_report,
    verify_theorem_5_1,
)

DEFAULT_SEED = 20260809


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skip | report
    expected: object = None
    measured: object = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "measured": _jsonable(self.measured),
            "seconds": round(self.seconds, 3),
        }


def _jsonable(value):
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, Fraction):
        return str(value)
    return value


@dataclass
class VerifySuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def check(self, name, measured, expected=None, seconds=0.0, status=None):
        if status is None:
            ok = measured == expected if expected is not None else bool(measured)
            status = "pass" if ok else "fail"
        self.checks.append(CheckResult(name, status, expected, measured, seconds))
        return status == "pass"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


# ---------------------------------------------------------------------------


def suite_examples() -> VerifySuiteReport:
    """Golden values of all worked examples."""
    rep = VerifySuiteReport("examples")

    hom, dt = _timed(lambda: build_hom(complete_graph(2), complete_graph(4)))
    rep.check("cuboctahedron_f_vector", hom_f_vector(hom), (12, 24, 14), dt)
    sizes = sorted(tuple(sorted(len(p) for p in c.parts)) for c in hom.cells)
    rep.check("cuboctahedron_maximal_cells", (sizes.count((1, 3)), sizes.count((2, 2))), (8, 6))

    third = Fraction(1, 3)
    cell = label_tuple([{0, 1}, {0, 2}, {1, 2}], "hom_plus")
    slice_rows, dt = _timed(lambda: cayley_slice(cell, 3))
    rep.check("hexagon_slice_vertex_count", len(slice_rows), 8, dt)
    mid = [pi_square(p, 3, 3) for p in slice_rows]
    final = sorted(pi_delta(p, 3) for p in mid)
    hexagon = {(2, 0, 1), (1, 0, 2), (0, 1, 2), (2, 1, 0), (1, 2, 0), (0, 2, 1)}
    rep.check(
        "hexagon_projected_points",
        {tuple(3 * c for c in p) for p in final},
        hexagon | {(1, 1, 1)},
    )
    rep.check("hexagon_center_hit_twice", final.count((third, third, third)), 2)
    flagged = minkowski_vertices(cell.parts, [third] * 3, 3)
    rep.check(
        "hexagon_minkowski_hull",
        (sum(1 for _, v in flagged if v), (tuple([third] * 3), False) in flagged),
        (6, True),
    )

    half = Fraction(1, 2)
    quad = minkowski_vertices([{0, 1}, {1, 2}], [half, half], 3)
    seg = minkowski_vertices([{0, 1}, {2}], [half, half], 3)
    rep.check(
        "overlapping_vs_disjoint_minkowski",
        (len([1 for _, v in quad if v]), len([1 for _, v in seg if v])),
        (4, 2),
    )

    cells, dt = _timed(lambda: projected_complex(complete_graph(2), complete_graph(4)))
    folded = sorted(tuple(sorted(len(p) for p in c.parts)) for c in cells)
    rep.check(
        "projection_folds_cells",
        (folded.count((1, 3)), folded.count((2, 2))),
        (4, 3),
        dt,
    )
    squares = [c for c in cells if tuple(sorted(len(p) for p in c.parts)) == (2, 2)]
    bad_pairs = sum(
        1
        for a, b in itertools.combinations(squares, 2)
        if common_face_test([a, b]) is not None
    )
    rep.check("internal_squares_intersect_badly", bad_pairs, 3)

    from homplex.staircase import full_paths, composition_complex

    rep.check("prism_staircase_facets", len(full_paths(2, 3)), 3)
    cc = composition_complex(2, 3)
    graph, _ = composition_graph(2, 3)
    rep.check("prism_slice_skeleton", cc.one_skeleton() == graph, True)

    rep.check("hole_sizes_worked_example", chi({2, 3, 5, 6}, 6), (1, 1, 0))
    rep.check("hole_sizes_4567", chi({4, 5, 6, 7}, 8), (3, 0, 1))
    path = frozenset({(1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (4, 3)})
    rep.check("path_to_lower_face", phi(path, 4, 3), frozenset({4, 6}))
    rep.check("lower_face_to_path", psi({4, 6}, 4, 3), path)
    return rep


def _graph_from_mask(n, mask):
    pairs = list(itertools.combinations(range(n), 2))
    return make_graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def suite_thm27(max_size: int = 4, samples: int = 200, seed: int = DEFAULT_SEED) -> VerifySuiteReport:
    """Slice identity and projection/slice commutativity: exhaustive up to
    max_size vertices per graph plus a random sample one size larger."""
    rep = VerifySuiteReport("thm27")
    t0 = time.perf_counter()
    failures = []
    count = 0
    for gn in range(1, max_size + 1):
        for hn in range(1, max_size + 1):
            g_masks = 1 << (gn * (gn - 1) // 2)
            h_masks = 1 << (hn * (hn - 1) // 2)
            for gm in range(g_masks):
                G = _graph_from_mask(gn, gm)
                for hm in range(h_masks):
                    H = _graph_from_mask(hn, hm)
                    count += 1
                    if not check_slice_identity(G, H):
                        failures.append(("slice", gn, gm, hn, hm))
                    if not check_diagram_commutativity(G, H):
                        failures.append(("commute", gn, gm, hn, hm))
    rep.check(
        f"exhaustive_pairs_up_to_{max_size}",
        (count, failures[:5]),
        (count, []),
        time.perf_counter() - t0,
    )

    t0 = time.perf_counter()
    rng = random.Random(seed)
    n = max_size + 1
    bits = n * (n - 1) // 2
    failures = []
    for _ in range(samples):
        G = _graph_from_mask(n, rng.getrandbits(bits))
        H = _graph_from_mask(n, rng.getrandbits(bits))
        if not (check_slice_identity(G, H) and check_diagram_commutativity(G, H)):
            failures.append((sorted(G.edges), sorted(H.edges)))
    rep.check(
        f"random_{samples}_pairs_at_{n}",
        failures[:5],
        [],
        time.perf_counter() - t0,
    )
    return rep


def suite_thm36(max_size: int = 6, jobs: int = 1) -> VerifySuiteReport:
    """Criterion (clique number) versus geometric oracle, one isomorphism
    class at a time."""
    rep = VerifySuiteReport("thm36")
    t0 = time.perf_counter()
    cases = []
    for n in range(1, max_size + 1):
        for H in nonisomorphic_graphs(n):
            for g in (2, 3):
                if clique_number(H) >= g:
                    cases.append((n, sorted(H.edges), g))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_thm36_case, cases)
    else:
        results = [_thm36_case(c) for c in cases]
    mismatches = sorted(case for case, ok in zip(cases, results) if not ok)
    rep.check(
        f"criterion_matches_geometry_up_to_{max_size}",
        (len(cases), mismatches[:5]),
        (len(cases), []),
        time.perf_counter() - t0,
    )

    res = is_projection_polytopal(complete_graph(4), 2)
    rep.check("tetrahedron_pairs_not_polytopal", res.verdict, False)
    rep.check("pentagon_cycle_polytopal", is_projection_polytopal(make_graph(5, [(i, (i + 1) % 5) for i in range(5)]), 2).verdict, True)
    return rep


def _thm36_case(case) -> bool:
    n, edges, g = case
    H = make_graph(n, edges)
    try:
        res = is_projection_polytopal(H, g, method="both")
    except AssertionError:
        return False
    return res.criterion == res.geometric


def suite_prop35(max_size: int = 6) -> VerifySuiteReport:
    """Projected vertices and edges sit in the 1-skeleton of the
    hypersimplex."""
    rep = VerifySuiteReport("prop35")
    t0 = time.perf_counter()
    bad = []
    count = 0
    for n in range(1, max_size + 1):
        for H in nonisomorphic_graphs(n):
            for g in (2, 3):
                if clique_number(H) < g:
                    continue
                count += 1
                if not hypersimplex_skeleton_check(H, g):
                    bad.append((n, sorted(H.edges), g))
    rep.check(
        f"hypersimplex_skeleton_up_to_{max_size}",
        (count, bad[:5]),
        (count, []),
        time.perf_counter() - t0,
    )
    return rep


TABLE_RANKS = {
    (3, 3): {1: 1},
    (3, 4): {2: 1},
    (3, 5): {3: 1},
    (3, 6): {4: 1},
    (3, 7): {5: 1},
    (3, 8): {6: 1},
    (4, 3): {1: 1},
    (4, 4): {3: 1},
    (4, 5): {3: 4, 4: 4},
    (4, 6): {5: 1},
    (4, 7): {5: 17, 6: 20},
    (5, 3): {1: 1},
    (5, 4): {3: 1},
    (5, 5): {3: 1},
    (5, 6): {5: 17},
    (6, 3): {1: 1},
    (6, 4): {3: 1},
    (6, 5): {3: 1},
    (7, 3): {1: 1},
    (7, 4): {3: 1},
}

ASSERTED_TABLE_ENTRIES = [(3, 3), (3, 4), (4, 3)]


def _homology_ranks(k, m, max_faces):
    diagonals = len(allowable_diagonals(k, m))
    if diagonals > 24:
        raise BudgetExceededError(
            f"{diagonals} diagonals puts the complex beyond the report budget"
        )
    complex_ = build_D_plus(k, m)
    total = sum(f_vector(complex_))
    if total > max_faces:
        raise BudgetExceededError(f"{total} faces exceeds report budget {max_faces}")
    groups = reduced_homology(complex_)
    ranks = {d: r for d, (r, _) in enumerate(groups) if r}
    torsion = [t for _, tors in groups for t in tors]
    return ranks, torsion, total


def suite_table1(max_faces: int = 600) -> VerifySuiteReport:
    """Homology of the transversal projected dissection complexes.

    The three smallest entries are asserted; everything else is computed
    when it fits the face budget and reported without failing the build.
    """
    rep = VerifySuiteReport("table1")
    for k, m in ASSERTED_TABLE_ENTRIES:
        (ranks, torsion, total), dt = _timed(lambda k=k, m=m: _homology_ranks(k, m, 10_000))
        rep.check(f"entry_{k}_{m}", (ranks, torsion), (TABLE_RANKS[(k, m)], []), dt)
    for (k, m), expected in sorted(TABLE_RANKS.items()):
        if (k, m) in ASSERTED_TABLE_ENTRIES:
            continue
        t0 = time.perf_counter()
        try:
            ranks, torsion, total = _homology_ranks(k, m, max_faces)
        except BudgetExceededError as exc:
            rep.checks.append(
                CheckResult(f"entry_{k}_{m}", "skip", expected, str(exc), time.perf_counter() - t0)
            )
            continue
        status = "report"
        rep.checks.append(
            CheckResult(
                f"entry_{k}_{m}",
                status,
                expected,
                {"ranks": ranks, "torsion": torsion, "faces": total},
                time.perf_counter() - t0,
            )
        )
    return rep


def suite_tzanaki() -> VerifySuiteReport:
    """Wedge ranks of the noncrossing-diagonal complexes."""
    rep = VerifySuiteReport("tzanaki")
    for k, m in [(3, 3), (3, 4), (4, 3), (5, 3), (3, 5)]:
        (groups), dt = _timed(lambda k=k, m=m: reduced_homology(build_T(k, m)))
        measured = {d: (r, tors) for d, (r, tors) in enumerate(groups) if r or tors}
        rep.check(
            f"wedge_rank_{k}_{m}",
            measured,
            {m - 2: (wedge_rank(k, m), [])},
            dt,
        )
    return rep


def suite_prop46() -> VerifySuiteReport:
    """Dimension of the projected dissection complexes."""
    rep = VerifySuiteReport("prop46")
    pairs = [(3, 3), (3, 4), (4, 3), (4, 4), (5, 3)]
    pairs += [(k, m) for k in range(3, 6) for m in range(2, 5) if (k, m) not in pairs]
    for k, m in pairs:
        expected = ((m // 2) * (k - 2), (m // 2) * (k - 2) + m - 2)
        try:
            measured, dt = _timed(lambda k=k, m=m: dimension_of_D(k, m))
        except AssertionError as exc:
            rep.check(f"dims_{k}_{m}", str(exc), expected)
            continue
        rep.check(f"dims_{k}_{m}", measured, expected, dt)
    return rep


def suite_dissections() -> VerifySuiteReport:
    """Diagonal counts, clique numbers, facet counts against the recursive
    dissection enumerator, and the flip graph cross-check."""
    rep = VerifySuiteReport("dissections")
    t0 = time.perf_counter()
    bad = []
    for k in range(3, 8):
        for m in range(2, 7):
            n = polygon_size(k, m)
            if len(allowable_diagonals(k, m)) != (m - 1) * n // 2:
                bad.append(("count", k, m))
            if clique_number(build_independence_graph(k, m)) != m - 1:
                bad.append(("clique", k, m))
    rep.check("diagonal_counts_and_clique_numbers", bad, [], time.perf_counter() - t0)

    for k, m in [(4, 3), (3, 3), (3, 4), (5, 3)]:
        t = build_T(k, m)
        diagonals = allowable_diagonals(k, m)
        idx = {d: i for i, d in enumerate(diagonals)}
        oracle = {frozenset(idx[d] for d in diss) for diss in polygon_dissections(k, m)}
        rep.check(
            f"facets_match_recursive_enumerator_{k}_{m}",
            (set(t.facets) == oracle, len(oracle)),
            (True, dissection_count(k, m)),
        )

    from homplex.dissections import flip_graph, flip_graph_direct

    for k, m in [(3, 3), (4, 3), (3, 4)]:
        rep.check(f"flip_graph_cross_check_{k}_{m}", flip_graph(k, m) == flip_graph_direct(k, m), True)

    bad_pairs, dt = _timed(lambda: common_face_test(build_D(4, 3)))
    rep.check("octagon_complex_is_polytopal", bad_pairs is None, True, dt)
    return rep


def suite_thm55(max_r: int = 5, max_s: int = 4) -> VerifySuiteReport:
    """Anti-isomorphism with the lower cyclic interval, the chi roundtrip,
    and the composition-graph skeleton."""
    rep = VerifySuiteReport("thm55")
    t0 = time.perf_counter()
    bad = []
    for r in range(1, 7):
        for s in range(2, 5):
            d, n = 2 * s - 2, r + 2 * s - 2
            for f in lower_facets(n, d):
                if chi_inverse(chi(f, n)) != f:
                    bad.append((r, s, sorted(f)))
    rep.check("chi_roundtrip_r6_s4", bad, [], time.perf_counter() - t0)
    rep.check("lower_facet_count_8_4", len(lower_facets(8, 4)), 15)

    for r in range(1, max_r + 1):
        for s in range(2, max_s + 1):
            report, dt = _timed(lambda r=r, s=s: thm55_report(r, s))
            rep.check(f"poset_anti_isomorphism_{r}_{s}", all(report.values()), True, dt)
    return rep


def suite_thm51() -> VerifySuiteReport:
    """Staircase copies inside the dissection complexes at the two named
    instances; the induced-subgraph comparison is reported."""
    rep = VerifySuiteReport("thm51")
    for k, m, r, s in [(4, 3, 2, 2), (4, 6, 4, 3)]:
        report, dt = _timed(lambda a=(k, m, r, s): verify_theorem_5_1(*a))
        checks = {name: val for name, val in report.items() if isinstance(val, bool)}
        rep.check(f"theorem_checks_{k}_{m}_{r}_{s}", all(checks.values()), True, dt)
        if (k, m, r, s) == (4, 3, 2, 2):
            rep.check("facet_count_4_3_2_2", report["facet_count"], 2)
        else:
            rep.check("facet_count_4_6_4_3", report["facet_count"], 10)
        emb = staircase_embedding_report(k, m, r, s)
        rep.check(f"embedding_is_subgraph_{k}_{m}_{r}_{s}", emb["subgraph"], True)
        rep.checks.append(
            CheckResult(
                f"embedding_induced_isomorphic_{k}_{m}_{r}_{s}",
                "report",
                True,
                emb["induced_isomorphic"],
            )
        )
    return rep


SUITES = {
    "examples": suite_examples,
    "thm27": suite_thm27,
    "thm36": suite_thm36,
    "prop35": suite_prop35,
    "table1": suite_table1,
    "tzanaki": suite_tzanaki,
    "prop46": suite_prop46,
    "dissections": suite_dissections,
    "thm55": suite_thm55,
    "thm51": suite_thm51,
}


def run_suite(name: str, max_size: int | None = None, jobs: int = 1) -> list[VerifySuiteReport]:
    """Run one suite (or all of them) with optional size override."""
    if name == "all":
        return [run_suite(n, max_size, jobs)[0] for n in SUITES]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    kwargs = {}
    if max_size is not None and name in ("thm27", "thm36", "prop35"):
        kwargs["max_size"] = max_size
    if jobs > 1 and name == "thm36":
        kwargs["jobs"] = jobs
    return [fn(**kwargs)]
