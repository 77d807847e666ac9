"""
Command-line interface: counts, enumeration, verification, transport,
bra-ket decomposition, diagram products, Gram matrices, series and simple dimensions
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from pascal_arrays.core.config import settings
from pascal_arrays.core.exceptions import PascalArrayError, report_error
from pascal_arrays.core.logging_config import configure_logging
from pascal_arrays.services import algebra, clusters, series
from pascal_arrays.services.graphs import (
    catalan_numbers,
    format_label,
    layer_counts,
    make_graph,
    parse_label,
)
from pascal_arrays.services.pascal import (
    catalan_decompose,
    element_to_schema,
    layer,
    transport,
    verify_catalan,
    verify_family,
)
from pascal_arrays.services.registry import family_names, get_family, get_sequence

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _print_json(payload: Any) -> None:
    print(json.dumps(payload, ensure_ascii=False, sort_keys=True))


def _default_depth(cap: int) -> int:
    return min(cap, settings.family_cap)


def _count(args: argparse.Namespace) -> int:
    g = make_graph(args.graph)
    if args.catalan:
        values = catalan_numbers(g, args.m)
        if args.json:
            _print_json({"graph": g.name, "catalan": values})
        else:
            print(series.bfile(values))
        return EXIT_OK

    table = layer_counts(g, args.n)
    if args.vertex is not None:
        v = parse_label(args.vertex)
        values = [table.get(n, v) for n in range(args.n + 1)]
        if args.json:
            _print_json({"graph": g.name, "vertex": args.vertex, "counts": values})
        else:
            print(series.bfile(values))
        return EXIT_OK

    rows = [
        (n, format_label(v), table.get(n, v)) for n in range(args.n + 1) for v in table.vertices(n)
    ]
    if args.json:
        _print_json([{"n": n, "vertex": v, "count": c} for n, v, c in rows])
    else:
        for n, v, c in rows:
            print(f"{n}\t{v}\t{c}")
    return EXIT_OK


def _enumerate(args: argparse.Namespace) -> int:
    f = get_family(args.family)
    vertex = parse_label(args.vertex) if args.vertex is not None else None
    for x in layer(f, args.n, vertex):
        if args.json:
            print(element_to_schema(f, x).model_dump_json())
        elif args.render:
            print(f"# {format_label(x.vertex)}")
            print(f.render(x.payload))
        else:
            print(f"{format_label(x.vertex)}\t{f.encode(x.payload)}")
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    if args.algebra:
        report = algebra.dimension_identity(
            algebra.get_algebra(args.algebra, args.n, **_contour_params(args))
        )
        if args.json:
            print(report.model_dump_json())
        else:
            print("OK" if report.ok else "FAILED")
            for v, c in report.half_counts.items():
                print(f"{v}\t{c}")
            print(f"basis\t{report.basis_count}\tsquares\t{report.sum_of_squares}")
        return EXIT_OK if report.ok else EXIT_FAILED

    if args.sequence:
        cs = get_sequence(args.sequence)
        report = verify_catalan(cs, _default_depth(cs.cap) if args.n is None else args.n)
        if args.json:
            print(report.model_dump_json())
        else:
            print("OK" if report.ok else "FAILED")
            for n, count in enumerate(report.member_counts):
                print(f"{n}\t{count}")
            for failure in report.failures:
                print(f"{failure.check.value}\t{failure.detail}\t{failure.witness or ''}")
        return EXIT_OK if report.ok else EXIT_FAILED

    f = get_family(args.family or "tl")
    n_max = _default_depth(f.cap) if args.n is None else args.n
    report = verify_family(f, n_max)
    if args.json:
        print(report.model_dump_json())
    else:
        print("OK" if report.ok else "FAILED")
        for n in range(n_max + 1):
            print(f"{n}\t" + " ".join(str(size) for size in report.layer_sizes(n)))
        for failure in report.failures:
            print(f"{failure.check.value}\t{failure.detail}\t{failure.witness or ''}")
    return EXIT_OK if report.ok else EXIT_FAILED


def _transport(args: argparse.Namespace) -> int:
    source, target = get_family(args.source), get_family(args.target)
    x = source.element(source.decode(args.payload))
    y = transport(source, target, x)
    if args.json:
        print(element_to_schema(target, y).model_dump_json())
    elif args.render:
        print(target.render(y.payload))
    else:
        print(target.encode(y.payload))
    return EXIT_OK


def _decompose(args: argparse.Namespace) -> int:
    cs = get_sequence(args.sequence)
    bra, ket = catalan_decompose(cs, args.n, cs.decode(args.member))
    if args.json:
        _print_json(
            {
                "bra": element_to_schema(cs.bra, bra).model_dump(),
                "ket": element_to_schema(cs.ket, ket).model_dump(),
            }
        )
    elif args.render:
        print(cs.bra.render(bra.payload))
        print(cs.ket.render(ket.payload))
    else:
        print(f"{format_label(bra.vertex)}\t{cs.bra.encode(bra.payload)}\t{cs.ket.encode(ket.payload)}")
    return EXIT_OK


def _contour_params(args: argparse.Namespace) -> Dict[str, Any]:
    if not args.algebra or not args.algebra.startswith("contour") or not args.mode:
        return {}
    return {"mode": args.mode}


def _multiply(args: argparse.Namespace) -> int:
    alg = algebra.get_algebra(args.algebra, args.n, **_contour_params(args))
    product = algebra.multiply(alg, alg.parse(args.left), alg.parse(args.right))
    if args.json:
        _print_json(
            [
                {"coefficient": str(c), "diagram": alg.encode(d)}
                for d, c in sorted(product.terms.items(), key=lambda t: alg.encode(t[0]))
            ]
        )
    else:
        print(product)
    return EXIT_OK


def _gram(args: argparse.Namespace) -> int:
    if args.det:
        print(algebra.gram_det(args.n, args.l))
    elif args.rank_at is not None:
        print(algebra.gram_rank(args.n, args.l, args.rank_at))
    else:
        matrix = algebra.gram(args.n, args.l)
        for i in range(matrix.rows):
            print("\t".join(str(matrix[i, j]) for j in range(matrix.cols)))
    return EXIT_OK


def _series(args: argparse.Namespace) -> int:
    if args.bell:
        values = series.series_bell_egf(args.m)
    else:
        lam = [int(x) for x in args.lam.split(",") if x.strip()] if args.lam else []
        values = series.series_hlambda(lam, args.m).integers()
    if args.json:
        _print_json(values)
    else:
        print(series.bfile(values))
    return EXIT_OK


def _simple_dims(args: argparse.Namespace) -> int:
    dims: Dict[int, int] = {}
    if args.kind == "tl":
        for lam in range(args.n % 2, args.n + 1, 2):
            dims[lam] = algebra.tl_simple_dim(args.n, lam, args.l)
    elif args.kind == "rollet":
        table = layer_counts(algebra.rollet_simple_graph(args.l), args.n)
        dims = {lam: table.get(args.n, lam) for lam in range(args.n % 2, args.n + 1, 2)}
    elif args.kind in ("blob", "blob-shifted"):
        compute: Callable[[int, int, int], int] = (
            algebra.blob_simple_dim if args.kind == "blob" else algebra.blob_simple_dim_shifted
        )
        for lam in range(args.l0 + 1, args.n + 1):
            if (lam - args.n) % 2 == 0:
                dims[lam] = compute(args.n, lam, args.l0)
    if args.json:
        _print_json({str(k): v for k, v in dims.items()})
    else:
        for lam, d in dims.items():
            print(f"{lam}\t{d}")
    return EXIT_OK


def _clusters(args: argparse.Namespace) -> int:
    rows = []
    for x in clusters.enumerate_clusters(args.rank):
        c, d = clusters.cluster_braket(x, args.rank + 1)
        rows.append((clusters.format_cluster(x), str(c), str(d)))
    if args.json:
        _print_json([{"cluster": x, "bra": c, "ket": d} for x, c, d in rows])
    else:
        for row in rows:
            print("\t".join(row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--render", action="store_true", help="ASCII diagrams")
    common.add_argument("--log-level", default=None, help=f"default {settings.log_level}")

    parser = argparse.ArgumentParser(
        prog="pascal-arrays", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="walk counts on a catalog graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--catalan", action="store_true", help="closed walks N(2n; root)")
    p.add_argument("-m", type=int, default=6)
    p.add_argument("-n", type=int, default=6)
    p.add_argument("--vertex", default=None)
    p.set_defaults(handler=_count)

    p = sub.add_parser("enumerate", parents=[common], help="list a family layer")
    p.add_argument("--family", required=True, help=", ".join(family_names()))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--vertex", default=None)
    p.set_defaults(handler=_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check a family, sequence or algebra")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--family")
    group.add_argument("--sequence")
    group.add_argument("--algebra")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--mode", choices=("blob", "cyclotomic"), default=None)
    p.set_defaults(handler=_verify)

    p = sub.add_parser("transport", parents=[common], help="carry an element across families")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("payload")
    p.set_defaults(handler=_transport)

    p = sub.add_parser("decompose", parents=[common], help="bra-ket pair of a member")
    p.add_argument("--sequence", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("member")
    p.set_defaults(handler=_decompose)

    p = sub.add_parser("multiply", parents=[common], help="product of two diagrams")
    p.add_argument("--algebra", required=True, help="tl, blob, partition, brauer, dn, contour:d,k")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--mode", choices=("blob", "cyclotomic"), default=None)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_multiply)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of a TL standard module")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--det", action="store_true")
    p.add_argument("--rank-at", default=None, help="rank with δ specialized")
    p.set_defaults(handler=_gram)

    p = sub.add_parser("series", parents=[common], help="generating function coefficients")
    p.add_argument("--lambda", dest="lam", default="", help="e.g. 2,2,1; empty for H0")
    p.add_argument("--bell", action="store_true")
    p.add_argument("-m", type=int, default=8)
    p.set_defaults(handler=_series)

    p = sub.add_parser("simple-dims", parents=[common], help="simple module dimensions")
    p.add_argument("--kind", choices=("tl", "rollet", "blob", "blob-shifted"), default="tl")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--l0", type=int, default=-1)
    p.set_defaults(handler=_simple_dims)

    p = sub.add_parser("clusters", parents=[common], help="clusters with their bra-ket pairs")
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(handler=_clusters)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except PascalArrayError as exc:
        content = report_error(exc, context=args.command)
        print(json.dumps(content, ensure_ascii=False), file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
