"""Command-line interface: build, project, slice, and verify.

All results go to stdout as JSON (deterministic for identical inputs);
diagnostics go to stderr.  Exit codes: 0 success / all checks passed,
1 verification failure, 2 usage or input error, 3 resource budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from homplex.complexes import BudgetExceededError, complex_to_json, label_tuple
from homplex.graphs import Graph, graph_from_json, graph_from_name, graph_to_json


def _load_graph(spec: str) -> Graph:
    if os.path.exists(spec):
        with open(spec) as fh:
            return graph_from_json(json.load(fh))
    return graph_from_name(spec)


def _fraction_rows(rows):
    return [[str(Fraction(x)) for x in row] for row in rows]


def _print(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def cmd_hom(args) -> int:
    from homplex.hom import (
        MODES,
        build_hom,
        cayley_slice,
        hom_f_vector,
        is_valid_cell,
        projected_complex,
    )

    G = _load_graph(args.G)
    H = _load_graph(args.H)
    hom = build_hom(G, H, args.mode)
    payload = hom.to_json()
    payload["f_vector"] = list(hom_f_vector(hom))
    if args.project:
        cells = projected_complex(G, H, args.mode)
        payload["projected"] = [c.to_json() for c in cells]
    if args.slice is not None or args.cell:
        mode = "hom_plus" if "plus" in args.mode else "hom"
        if args.cell:
            cells = [label_tuple(json.loads(args.cell), mode)]
            induced = args.mode.startswith("ihom")
            if not is_valid_cell(G, H, cells[0], induced):
                raise ValueError("provided cell is not valid in this complex")
        else:
            cells = list(hom.cells)
        payload["slices"] = [
            {
                "cell": [sorted(p) for p in cell.parts],
                "vertices": _fraction_rows(cayley_slice(cell, H.n)),
            }
            for cell in cells
        ]
    _print(payload)
    return 0


def cmd_dissect(args) -> int:
    from homplex.complexes import f_vector
    from homplex.dissections import (
        allowable_diagonals,
        build_D,
        build_D_plus,
        build_D_plus_t,
        build_ic_delta,
        build_T,
        flip_graph,
        polygon_size,
    )
    from homplex.homology import homology_report

    k, m = args.k, args.m
    payload = {"k": k, "m": m, "N": polygon_size(k, m)}
    payload["diagonals"] = [list(d) for d in allowable_diagonals(k, m)]
    complex_ = None
    if args.what == "delta":
        pass
    elif args.what == "T":
        complex_ = build_T(k, m)
        payload["T"] = complex_to_json(complex_)
    elif args.what == "D":
        cells = build_D(k, m)
        payload["D"] = [c.to_json() for c in cells]
    elif args.what == "Dplus":
        complex_ = build_D_plus(k, m)
        payload["Dplus"] = complex_to_json(complex_)
    elif args.what == "Dplus_t":
        complex_ = build_D_plus_t(k, m)
        payload["Dplus_t"] = complex_to_json(complex_)
    elif args.what == "flip":
        payload["flip_graph"] = graph_to_json(flip_graph(k, m))
    elif args.what == "ic":
        complex_ = build_ic_delta(k, m)
        payload["ic"] = complex_to_json(complex_)
    if complex_ is not None:
        payload["f_vector"] = list(f_vector(complex_))
    if args.homology:
        if complex_ is None:
            raise ValueError(f"--homology needs a complex, not {args.what!r}")
        payload["homology"] = homology_report(complex_, args.budget)
    _print(payload)
    return 0


def cmd_cyclic(args) -> int:
    from homplex.cyclic import (
        composition_graph,
        compositions,
        lower_facets,
    )
    from homplex.staircase import composition_complex, thm55_report

    if args.r is not None and args.s is not None:
        r, s = args.r, args.s
        d, n = 2 * s - 2, args.r + 2 * s - 2
        if args.n is not None and args.n != n:
            raise ValueError(f"inconsistent parameters: n must be {n} for r={r}, s={s}")
        if args.d is not None and args.d != d:
            raise ValueError(f"inconsistent parameters: d must be {d} for s={s}")
    elif args.n is not None and args.d is not None:
        n, d = args.n, args.d
        if d % 2:
            raise ValueError("d must be even")
        s = d // 2 + 1
        r = n - d
    else:
        raise ValueError("give either -r and -s, or -n and -d")
    payload = {"r": r, "s": s, "n": n, "d": d}
    if args.what == "lower_facets":
        payload["lower_facets"] = [sorted(f) for f in lower_facets(n, d)] if d >= 2 else []
    elif args.what == "compositions":
        payload["compositions"] = [list(c) for c in compositions(r, s)]
    elif args.what == "graph":
        graph, comps = composition_graph(r, s)
        payload["vertices"] = [list(c) for c in comps]
        payload["graph"] = graph_to_json(graph)
    elif args.what == "complex":
        cc = composition_complex(r, s)
        payload["cells"] = [
            {
                "path": [list(p) for p in sorted(path)],
                "dimension": cc.cell_dimension(path),
                "vertices": [list(v) for v in sorted(cc.cell_vertices(path))],
            }
            for path in cc.cells
        ]
    elif args.what == "phi_psi_check":
        report = thm55_report(r, s)
        payload["checks"] = report
        if not all(report.values()):
            _print(payload)
            return 1
    _print(payload)
    return 0


def cmd_verify(args) -> int:
    from homplex.verify import run_suite

    reports = run_suite(args.suite, args.max_size, args.jobs)
    payload = {"reports": [r.to_json() for r in reports]}
    _print(payload)
    ok = all(r.passed for r in reports)
    for r in reports:
        for c in r.checks:
            print(f"[{c.status:>6}] {r.suite}.{c.name} ({c.seconds:.2f}s)", file=sys.stderr)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    from homplex.hom import MODES
    from homplex.verify import SUITES

    parser = argparse.ArgumentParser(
        prog="homplex",
        description="Exact homomorphism complexes, dissection complexes, and cyclic/staircase combinatorics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hom = sub.add_parser("hom", help="build a homomorphism complex")
    p_hom.add_argument("--G", required=True, help="graph family (K4, C5, E3, I4_3, S4_3) or JSON file")
    p_hom.add_argument("--H", required=True)
    p_hom.add_argument("--mode", default="hom", choices=MODES)
    p_hom.add_argument("--project", action="store_true", help="include projected cells")
    p_hom.add_argument("--slice", action="store_const", const=True, help="include slice vertex matrices")
    p_hom.add_argument("--cell", help="JSON list of parts to slice, e.g. [[0,1],[0,2],[1,2]]")
    p_hom.set_defaults(fn=cmd_hom)

    p_dis = sub.add_parser("dissect", help="build dissection complexes")
    p_dis.add_argument("-k", type=int, required=True)
    p_dis.add_argument("-m", type=int, required=True)
    p_dis.add_argument("--what", default="T", choices=["delta", "T", "D", "Dplus", "Dplus_t", "flip", "ic"])
    p_dis.add_argument("--homology", action="store_true")
    p_dis.add_argument("--budget", type=int, default=None, help="face budget override")
    p_dis.set_defaults(fn=cmd_dissect)

    p_cyc = sub.add_parser("cyclic", help="cyclic polytope and composition machinery")
    p_cyc.add_argument("-r", type=int)
    p_cyc.add_argument("-s", type=int)
    p_cyc.add_argument("-n", type=int)
    p_cyc.add_argument("-d", type=int)
    p_cyc.add_argument(
        "--what",
        default="lower_facets",
        choices=["lower_facets", "compositions", "graph", "complex", "phi_psi_check"],
    )
    p_cyc.set_defaults(fn=cmd_cyclic)

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    p_ver.add_argument("--max-size", type=int, default=None, dest="max_size")
    p_ver.add_argument("--jobs", type=int, default=1, help="parallel workers for sweeps")
    p_ver.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
