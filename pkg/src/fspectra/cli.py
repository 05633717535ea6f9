"""Command-line interface.

Subcommands: rho, spectrum, certify, subdivide, kelmans, enumerate,
extremal, verify. Numeric output uses 6 decimal places (round-half-even,
Python's default float formatting). Exit codes: 0 success, 1 verification
failure, 2 usage or domain error.
"""

import argparse
import sys

from . import search
from .errors import FspectraError
from .families import identify_pendant_free_bicyclic, make, parse_family
from .graph_core import (
    canonical_form,
    format_graph_text,
    read_graph_file,
)
from .luman import certify, principal_incidence
from .spectral import DEFAULT_TOL, f_adjacency, f_spectral_radius, full_spectrum
from .transforms import kelmans as kelmans_op
from .transforms import subdivide
from .weights import parse_weight


def _add_graph_source(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", help="path to a graph file (format: 'n m' then edges)")
    group.add_argument("--family", help="family spec, e.g. theta:3,3,2 or cycle:8")


def _load_graph(args):
    if args.graph:
        return read_graph_file(args.graph)
    return make(parse_family(args.family))


def _parse_edge(text):
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError:
        raise FspectraError(f"bad edge {text!r}; expected 'u,v'") from None
    return (u, v)


def _parse_range(text):
    """'3..5' -> [3, 4, 5]; '4' -> [4]."""
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _encoding(G):
    n, bits = canonical_form(G)
    return f"{n}:" + "".join(str(b) for b in bits)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fspectra",
        description="Spectral radii of degree-weighted adjacency matrices: "
        "computation, certification, transformation, and extremal search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", help="Perron value of the weighted adjacency matrix")
    _add_graph_source(p)
    p.add_argument("--weight", required=True, help="weight spec, e.g. sombor or table:2,2=1;3,2=2")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--vector", action="store_true", help="also print the eigenvector")

    p = sub.add_parser("spectrum", help="all eigenvalues, descending")
    _add_graph_source(p)
    p.add_argument("--weight", required=True)

    p = sub.add_parser("certify", help="principal incidence matrix and its classification")
    _add_graph_source(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--tol", type=float, default=1e-8)

    p = sub.add_parser("subdivide", help="subdivide one edge; emits the new graph")
    _add_graph_source(p)
    p.add_argument("--edge", required=True, help="edge as 'u,v'")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("kelmans", help="Kelmans operation on two vertices")
    _add_graph_source(p)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("enumerate", help="isomorph-free graph lists at small order")
    p.add_argument(
        "--class",
        dest="class_name",
        required=True,
        choices=["trees", "unicyclic", "bicyclic", "pendant-free-bicyclic", "connected"],
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--size", type=int, help="edge count (for --class connected)")

    p = sub.add_parser("extremal", help="extremal rho_f over an enumerated class")
    p.add_argument(
        "--class",
        dest="class_name",
        required=True,
        choices=["trees", "unicyclic", "bicyclic", "pendant-free-bicyclic"],
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--objective", choices=["min", "max"], default="min")
    p.add_argument("--tie-tol", type=float, default=search.TIE_TOL)

    p = sub.add_parser("verify", help="run a named verification; exit 1 on failure")
    p.add_argument("--theorem", required=True, choices=list(search.THEOREMS))
    p.add_argument("--weights", required=True, help="comma-separated weight specs")
    p.add_argument("--s", help="range a..b for s parameters")
    p.add_argument("--t", help="range a..b for t parameters")
    p.add_argument("--n", help="range a..b of graph orders")
    p.add_argument("--m", help="range a..b of graph sizes")
    p.add_argument(
        "--classes", help="comma-separated search classes (trees,unicyclic,bicyclic)"
    )
    return parser


def _cmd_rho(args):
    G = _load_graph(args)
    f = parse_weight(args.weight)
    res = f_spectral_radius(G, f, tol=args.tol)
    print(f"rho {res.rho:.6f}")
    if args.vector:
        for i, x in enumerate(res.vector):
            print(f"x{i} {x:.6f}")
    return 0


def _cmd_spectrum(args):
    G = _load_graph(args)
    f = parse_weight(args.weight)
    for lam in full_spectrum(f_adjacency(G, f)):
        print(f"{lam:.6f}")
    return 0


def _cmd_certify(args):
    G = _load_graph(args)
    f = parse_weight(args.weight)
    alpha, report = certify(G, f, tol=args.tol)
    print(f"alpha {alpha:.12g}")
    print(f"classification {report.classification}")
    print(f"consistent {str(report.consistent).lower()}")
    print(f"max_vertex_slack {max(abs(s) for s in report.vertex_slack.values()):.3e}")
    print(f"max_edge_slack {max(abs(s) for s in report.edge_slack.values()):.3e}")
    B = principal_incidence(G, f)
    for (v, e), val in sorted(B.items()):
        print(f"B {v} {e[0]}-{e[1]} {val:.6f}")
    return 0


def _emit_graph(G, out):
    text = format_graph_text(G)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_subdivide(args):
    G = _load_graph(args)
    _emit_graph(subdivide(G, _parse_edge(args.edge)), args.out)
    return 0


def _cmd_kelmans(args):
    G = _load_graph(args)
    res = kelmans_op(G, args.u, args.v)
    print(f"# moved {','.join(str(w) for w in res.moved) or '-'}")
    print(f"# connected {str(res.connected).lower()}")
    print(f"# isomorphic_to_input {str(res.isomorphic_to_input).lower()}")
    print(f"# endpoints_nonadjacent {str(res.endpoints_nonadjacent).lower()}")
    _emit_graph(res.graph, args.out)
    return 0


def _cmd_enumerate(args):
    if args.class_name == "connected":
        if args.size is None:
            raise FspectraError("--class connected requires --size")
        graphs = list(search.enumerate_connected(args.order, args.size))
    else:
        graphs = search.class_graphs(args.class_name.replace("-", "_"), args.order)
    for G in graphs:
        spec = identify_pendant_free_bicyclic(G)
        tag = str(spec) if spec else "-"
        edges = ",".join(f"{u}-{v}" for u, v in G.sorted_edges())
        print(f"{tag}\t{G.n} {G.m}\t{edges}")
    print(f"# count {len(graphs)}")
    return 0


def _cmd_extremal(args):
    f = parse_weight(args.weight)
    report = search.extremal(
        args.class_name.replace("-", "_"),
        args.order,
        f,
        args.objective,
        tie_tol=args.tie_tol,
    )
    sys.stdout.write(search.report_tsv(report))
    return 0


def _cmd_verify(args):
    weights = [parse_weight(w) for w in args.weights.split(",")]
    kwargs = {}
    if args.s:
        kwargs["s_values"] = _parse_range(args.s)
    if args.t:
        kwargs["t_values"] = _parse_range(args.t)
    if args.n:
        kwargs["n_values"] = _parse_range(args.n)
    if args.m:
        kwargs["m_values"] = _parse_range(args.m)
    if args.classes:
        kwargs["class_names"] = [c.strip() for c in args.classes.split(",")]
    report = search.verify_theorem(args.theorem, weights, **kwargs)
    for line in report.checks:
        print(f"{line.status} {line.text}")
    total = len(report.checks)
    fails = sum(1 for c in report.checks if c.status == "FAIL")
    print(f"# theorem={report.theorem} checks={total} failures={fails}")
    if report.passed is None:
        return 0
    return 0 if report.passed else 1


_DISPATCH = {
    "rho": _cmd_rho,
    "spectrum": _cmd_spectrum,
    "certify": _cmd_certify,
    "subdivide": _cmd_subdivide,
    "kelmans": _cmd_kelmans,
    "enumerate": _cmd_enumerate,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _DISPATCH[args.command](args)
    except FspectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
