"""Command-line front end.

Exit codes: 0 for success or a passing verification, 1 for invalid input or
a failing verification, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats, server
from .algebra import build_algebra, cartan_count, quiver
from .enumeration import SizeLimit, all_trees, mutation_graph, orbit_order
from .homotopy import endomorphism_algebra, or_complex
from .ribbon import (
    Inconsistent,
    InvalidTree,
    NotIncident,
    UnknownEdge,
    canonical_code,
    cartan_formula,
    ext_formula,
    mutate,
    reconstruct,
    to_star_sequence,
)
from .verify import (
    sweep_trees,
    verify_braid,
    verify_cartan,
    verify_counts,
    verify_main,
    verify_to_star,
)


def _load_tree(path: str):
    return formats.loads_tree(Path(path).read_text())


def _write_or_print(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    try:
        t = _load_tree(args.file)
    except InvalidTree as exc:
        for err in exc.errors:
            print(err, file=sys.stderr)
        return 1
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return 1
    print(f"valid Brauer tree: {t.n} edges, {len(t.vertices)} vertices")
    return 0


def _cmd_mutate(args) -> int:
    t = _load_tree(args.file)
    try:
        m = mutate(t, args.edge)
    except UnknownEdge as exc:
        print(exc, file=sys.stderr)
        return 1
    _write_or_print(formats.dumps_tree(m), args.output)
    return 0


def _cmd_cartan(args) -> int:
    t = _load_tree(args.file)
    if args.method == "formula":
        mat = cartan_formula(t)
    elif args.method == "count":
        mat = cartan_count(build_algebra(t))
    else:  # endo: through the endomorphism algebra of the identity complex
        a = build_algebra(t)
        mat = cartan_count(endomorphism_algebra(or_complex(a, set(t.edges)), list(t.edges)))
    sys.stdout.write(formats.dumps_matrix(mat))
    return 0


def _cmd_ext(args) -> int:
    t = _load_tree(args.file)
    sys.stdout.write(formats.dumps_matrix(ext_formula(t)))
    return 0


def _cmd_endo(args) -> int:
    t = _load_tree(args.file)
    if args.edge not in t.ends:
        print(f"unknown edge {args.edge}", file=sys.stderr)
        return 1
    a = build_algebra(t)
    b = endomorphism_algebra(or_complex(a, set(t.edges) - {args.edge}), list(t.edges))
    print("cartan:")
    sys.stdout.write(formats.dumps_matrix(cartan_count(b)))
    print("quiver:")
    sys.stdout.write(formats.dumps_matrix(quiver(b)))
    return 0


def _cmd_reconstruct(args) -> int:
    cartan = formats.loads_matrix(Path(args.cartan_file).read_text())
    ext = formats.loads_matrix(Path(args.ext_file).read_text())
    try:
        t = reconstruct(cartan, ext)
    except Inconsistent as exc:
        print(f"Inconsistent: {exc}", file=sys.stderr)
        return 1
    _write_or_print(formats.dumps_tree(t), args.output)
    return 0


def _cmd_to_star(args) -> int:
    t = _load_tree(args.file)
    try:
        seq = to_star_sequence(t, args.vertex)
    except NotIncident as exc:
        print(exc, file=sys.stderr)
        return 1
    print(" ".join(map(str, seq)) if seq else "already a star")
    return 0


def _cmd_orbit(args) -> int:
    t = _load_tree(args.file)
    if args.edge not in t.ends:
        print(f"unknown edge {args.edge}", file=sys.stderr)
        return 1
    print(orbit_order(t, args.edge))
    return 0


def _cmd_enumerate(args) -> int:
    mode = "labeled" if args.labeled else "unlabeled"
    try:
        fam = all_trees(args.edges, multiplicity=args.mult, mode=mode)
    except (SizeLimit, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 1
    print(f"{len(fam)} trees (n={fam.n}, mult={fam.multiplicity}, {fam.mode})")
    for t in fam.members:
        sys.stdout.write(formats.dumps_tree(t))
    return 0


def _cmd_mutation_graph(args) -> int:
    try:
        fam = all_trees(args.edges, multiplicity=args.mult)
    except (SizeLimit, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 1
    g = mutation_graph(fam)
    import json

    sys.stdout.write(
        json.dumps(
            {
                "nodes": list(g.nodes),
                "arrows": [{"source": a, "edge": e, "target": b} for a, e, b in g.arrows],
            },
            indent=2,
        )
        + "\n"
    )
    return 0


_VERIFY_DEFAULTS = {
    # check: (max_edges, max_mult)
    "main": (4, 3),
    "cartan": (6, 3),
    "braid": (5, 2),
    "to-star": (6, 2),
    "counts": (6, 2),
}


def _cmd_verify(args) -> int:
    default_edges, default_mult = _VERIFY_DEFAULTS[args.what]
    max_edges = args.max_edges or default_edges
    max_mult = args.max_mult or default_mult
    reports = []
    if args.what == "main":
        for t in sweep_trees(max_edges, max_mult):
            for i in t.edges:
                reports.append(verify_main(t, i))
    elif args.what == "cartan":
        for t in sweep_trees(max_edges, max_mult):
            reports.append(verify_cartan(t))
    elif args.what == "braid":
        for n in range(1, max_edges + 1):
            reports.append(verify_braid(all_trees(n)))
        for m in range(2, max_mult + 1):
            for n in range(1, max_edges):
                reports.append(verify_braid(all_trees(n, multiplicity=m)))
    elif args.what == "to-star":
        for t in sweep_trees(max_edges, max_mult):
            for v in t.vertices:
                reports.append(verify_to_star(t, v.id))
    else:  # counts
        for n in range(1, max_edges + 1):
            reports.append(verify_counts(n))
        for m in range(2, max_mult + 1):
            for n in range(1, max_edges + 1):
                reports.append(verify_counts(n, m))
    failed = [r for r in reports if not r.passed]
    for r in reports:
        if not r.passed or args.verbose:
            print(r.summary())
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def _cmd_export_dot(args) -> int:
    t = _load_tree(args.file)
    _write_or_print(formats.tree_to_dot(t), args.output)
    return 0


def _cmd_serve(args) -> int:
    t = _load_tree(args.file)
    ui_dir = Path(args.ui_dir) if args.ui_dir else None
    if ui_dir is None:
        candidate = Path.cwd() / "frontend" / "dist"
        if candidate.is_dir():
            ui_dir = candidate
    server.serve(t, args.port, host=args.host, ui_dir=ui_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauertrees",
        description="Brauer trees, their mutation, and tilting-mutation verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a tree file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("mutate", help="mutate at an edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("cartan", help="Cartan matrix of the tree algebra")
    p.add_argument("file")
    p.add_argument("--method", choices=("formula", "count", "endo"), default="formula")
    p.set_defaults(func=_cmd_cartan)

    p = sub.add_parser("ext", help="Ext^1 matrix of the tree algebra")
    p.add_argument("file")
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("endo", help="Cartan and quiver of the tilting mutation")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.set_defaults(func=_cmd_endo)

    p = sub.add_parser("reconstruct", help="rebuild a tree from Cartan + Ext files")
    p.add_argument("cartan_file")
    p.add_argument("ext_file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("to-star", help="greedy mutation sequence to a star")
    p.add_argument("file")
    p.add_argument("--vertex", required=True)
    p.set_defaults(func=_cmd_to_star)

    p = sub.add_parser("orbit", help="order of repeated mutation at an edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("enumerate", help="all trees of a given size")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--mult", type=int)
    p.add_argument("--labeled", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("mutation-graph", help="mutation graph of a family")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--mult", type=int)
    p.set_defaults(func=_cmd_mutation_graph)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("what", choices=("main", "cartan", "braid", "to-star", "counts"))
    p.add_argument("--max-edges", type=int)
    p.add_argument("--max-mult", type=int)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export-dot", help="Graphviz drawing of a tree")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_export_dot)

    p = sub.add_parser("serve", help="run the explorer session server")
    p.add_argument("--file", required=True)
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidTree as exc:
        for err in exc.errors:
            print(err, file=sys.stderr)
        return 1
    except (FileNotFoundError, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
