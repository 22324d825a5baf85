"""Command-line surface: one verb per pipeline stage.

Exit codes: 0 success/verified, 1 verification finding (a separating girth
cycle), 2 usage or input error. Reports go to stdout, diagnostics to
stderr. Graph input is a graph6 file (first line used) or a catalog lookup
via --catalog with --k/--g.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cage_analysis import verify_cage_nonseparating
from .catalog_io import catalog_entries, get_cage, moore_bound, read_graph6_file
from .cycle_engine import enumerate_g_cycles, girth, is_nonseparating
from .errors import CageError
from .graph_core import Graph
from .reports import (
    permutation_to_dict,
    render_permutation_text,
    render_report_text,
    report_to_dict,
)
from .special_perm import (
    UnionSpec,
    is_special_permutation,
    special_perm_cycle,
    special_perm_path,
    special_perm_union,
    union_graph,
)
from .generators import cycle_graph, path_graph

OK, FINDING, USAGE = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cage",
        description="Girth cycles, nonseparating-cycle verification, and "
        "special permutations on cage graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_graph_source(p, catalog_ok=True):
        p.add_argument("input", nargs="?", help="graph6 file (one graph per line)")
        if catalog_ok:
            p.add_argument("--catalog", action="store_true", help="load from the catalog")
            p.add_argument("--k", type=int, help="degree for catalog lookup")
            p.add_argument("--g", type=int, help="girth for catalog lookup")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    add_graph_source(sub.add_parser("girth", help="compute the girth"))
    add_graph_source(sub.add_parser("cycles", help="list all girth cycles"))
    add_graph_source(sub.add_parser("nonsep", help="per-cycle nonseparating flags"))
    add_graph_source(sub.add_parser("verify", help="verify every girth cycle is nonseparating"))
    add_graph_source(sub.add_parser("analyze", help="full per-cycle structural analysis"))

    perm = sub.add_parser("perm", help="special permutation constructors")
    psub = perm.add_subparsers(dest="family", required=True)
    pc = psub.add_parser("cycle", help="special permutation of a cycle")
    pc.add_argument("--g", type=int, required=True, help="cycle length (>= 5)")
    pc.add_argument("--json", action="store_true")
    pp = psub.add_parser("path", help="special permutation of a path")
    pp.add_argument("--n", type=int, required=True, help="path order (>= 4)")
    pp.add_argument("--json", action="store_true")
    pu = psub.add_parser("union", help="special permutation of a path/cycle union")
    pu.add_argument("--paths", default="", help="comma-separated path orders")
    pu.add_argument("--cycles", default="", help="comma-separated cycle lengths")
    pu.add_argument("--json", action="store_true")

    cat = sub.add_parser("catalog", help="embedded cage catalog")
    csub = cat.add_subparsers(dest="action", required=True)
    cl = csub.add_parser("list", help="list catalog entries")
    cl.add_argument("--json", action="store_true")
    cg = csub.add_parser("get", help="print one catalog entry")
    cg.add_argument("--k", type=int, required=True)
    cg.add_argument("--g", type=int, required=True)
    cg.add_argument("--json", action="store_true")
    return parser


def _load_graph(args) -> tuple[Graph, str, int | None, int | None]:
    if getattr(args, "catalog", False):
        if args.k is None or args.g is None:
            raise CageError("--catalog needs both --k and --g")
        record = get_cage(args.k, args.g)
        return record.graph(), record.name, record.k, record.g
    if not args.input:
        raise CageError("provide a graph6 file or --catalog with --k/--g")
    graphs = read_graph6_file(args.input)
    if not graphs:
        raise CageError(f"no graphs found in {args.input}")
    if len(graphs) > 1:
        print(
            f"note: {args.input} holds {len(graphs)} graphs; using the first",
            file=sys.stderr,
        )
    return graphs[0], args.input, getattr(args, "k", None), getattr(args, "g", None)


def _emit(payload: dict, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_girth(args) -> int:
    g, name, _, _ = _load_graph(args)
    gir = girth(g)
    value = None if gir.is_unreachable else gir.hops
    _emit(
        {"name": name, "order": g.n, "girth": value},
        f"girth: {'unreachable' if value is None else value}",
        args.json,
    )
    return OK


def _cmd_cycles(args) -> int:
    g, name, _, _ = _load_graph(args)
    cycles = enumerate_g_cycles(g)
    text = [f"girth: {len(cycles[0])}", f"count: {len(cycles)}"]
    text.extend(" ".join(map(str, c.vertices)) for c in cycles)
    _emit(
        {
            "name": name,
            "girth": len(cycles[0]),
            "count": len(cycles),
            "cycles": [list(c.vertices) for c in cycles],
        },
        "\n".join(text),
        args.json,
    )
    return OK


def _cmd_nonsep(args) -> int:
    g, name, _, _ = _load_graph(args)
    cycles = enumerate_g_cycles(g)
    flags = [(c, is_nonseparating(g, c)) for c in cycles]
    good = sum(1 for _, ok in flags if ok)
    text = [f"result: {good}/{len(flags)} g-cycles nonseparating"]
    text.extend(
        f"{' '.join(map(str, c.vertices))}: "
        f"{'nonseparating' if ok else 'SEPARATING'}"
        for c, ok in flags
    )
    _emit(
        {
            "name": name,
            "girth": len(cycles[0]),
            "count": len(flags),
            "nonseparating": good,
            "cycles": [
                {"cycle": list(c.vertices), "nonseparating": ok} for c, ok in flags
            ],
        },
        "\n".join(text),
        args.json,
    )
    return OK if good == len(flags) else FINDING


def _cmd_verify(args, detail: bool = False) -> int:
    g, name, k, gg = _load_graph(args)
    report = verify_cage_nonseparating(g, k, gg, name=name)
    _emit(
        report_to_dict(report, detail=detail),
        render_report_text(report, detail=detail),
        args.json,
    )
    return OK if report.all_nonseparating else FINDING


def _cmd_perm(args) -> int:
    if args.family == "cycle":
        perm = special_perm_cycle(args.g)
        host = cycle_graph(args.g)
    elif args.family == "path":
        perm = special_perm_path(args.n)
        host = path_graph(args.n)
    else:
        paths = tuple(int(x) for x in args.paths.split(",") if x)
        cycles = tuple(int(x) for x in args.cycles.split(",") if x)
        spec = UnionSpec(paths, cycles)
        perm = special_perm_union(spec)
        host = union_graph(spec)
    special = is_special_permutation(host, perm)
    payload = permutation_to_dict(perm)
    payload["special"] = special
    _emit(payload, render_permutation_text(perm, special), args.json)
    return OK


def _cmd_catalog(args) -> int:
    if args.action == "list":
        records = catalog_entries()
        rows = [
            {
                "k": r.k,
                "g": r.g,
                "order": r.order,
                "name": r.name,
                "moore_bound": moore_bound(r.k, r.g),
                "slow": r.slow,
            }
            for r in records
        ]
        text = "\n".join(
            f"({row['k']},{row['g']}) {row['name']}: order={row['order']} "
            f"moore={row['moore_bound']}{' slow' if row['slow'] else ''}"
            for row in rows
        )
        _emit({"entries": rows}, text, args.json)
        return OK
    record = get_cage(args.k, args.g)
    checks = record.verified()
    payload = {
        "k": record.k,
        "g": record.g,
        "order": record.order,
        "name": record.name,
        "graph6": record.graph6,
        "verified": checks,
    }
    text = "\n".join(
        [
            f"name: {record.name}",
            f"k: {record.k}",
            f"g: {record.g}",
            f"order: {record.order}",
            f"verified: {'pass' if all(checks.values()) else 'FAIL'}",
            f"graph6: {record.graph6}",
        ]
    )
    _emit(payload, text, args.json)
    return OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        if args.verb == "girth":
            return _cmd_girth(args)
        if args.verb == "cycles":
            return _cmd_cycles(args)
        if args.verb == "nonsep":
            return _cmd_nonsep(args)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "analyze":
            return _cmd_verify(args, detail=True)
        if args.verb == "perm":
            return _cmd_perm(args)
        if args.verb == "catalog":
            return _cmd_catalog(args)
    except CageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    raise AssertionError("unhandled verb")


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
