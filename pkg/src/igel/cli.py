"""Command-line frontend: encode, survey, compare, gen, refine.

Exit codes: 0 success (and 'distinguished' for compare), 1 usage error,
2 data error, 3 'equivalent' for compare. Diagnostics go to stderr only,
so stdout stays byte-stable for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import families
from .encode import encode_graph
from .features import IgelEncoder
from .graph import (
    Graph,
    GraphCollection,
    GraphError,
    parse_edge_list_mapped,
    parse_graph6_collection,
    write_edge_list,
    write_graph6,
)
from .survey import EncoderSpec, pairwise_compare, run_survey
from .wl import wl_refine

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_EQUIVALENT = 3

THREADS_ENV = "IGEL_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit 1
        raise UsageError(message)


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _infer_format(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    return "g6" if path.endswith((".g6", ".graph6")) else "edgelist"


def _load_collection(path: str, fmt: str, zero_indexed: bool) -> GraphCollection:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"{path}: {exc.strerror or exc}") from None
    try:
        if fmt == "g6":
            return parse_graph6_collection(text, source=path)
        graph, _ = parse_edge_list_mapped(text, zero_indexed=zero_indexed)
        return GraphCollection(graphs=(graph,), source=path)
    except GraphError as exc:
        raise GraphError(f"{path}: {exc}") from None


def _load_single(path: str, fmt: str, zero_indexed: bool) -> Graph:
    coll = _load_collection(path, fmt, zero_indexed)
    if len(coll) != 1:
        raise GraphError(f"{path}: expected exactly one graph, found {len(coll)}")
    return coll[0]


def _parse_alphas(raw: str) -> tuple[int, ...]:
    try:
        alphas = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise UsageError(f"--alpha expects an integer or comma list, got {raw!r}") from None
    if not alphas or any(a < 1 for a in alphas):
        raise UsageError(f"--alpha values must be >= 1, got {raw!r}")
    return alphas


def _make_spec(method: str, alpha_raw: str, wl_max_iters: int | None) -> EncoderSpec:
    alphas = _parse_alphas(alpha_raw)
    if method == "igel_concat":
        return EncoderSpec(method=method, alpha=alphas)
    if method == "wl":
        return EncoderSpec(method="wl", wl_max_iters=wl_max_iters)
    if len(alphas) != 1:
        raise UsageError(f"method {method!r} takes a single --alpha, got {alpha_raw!r}")
    return EncoderSpec(method=method, alpha=alphas[0])


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def build_parser() -> _Parser:
    parser = _Parser(prog="igel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_flags(p, with_indexing=True):
        p.add_argument("input", help="input graph file")
        p.add_argument(
            "--format",
            choices=("edgelist", "g6"),
            default=None,
            help="input format (default: g6 for .g6/.graph6 files, else edgelist)",
        )
        if with_indexing:
            grp = p.add_mutually_exclusive_group()
            grp.add_argument(
                "--zero-indexed",
                action="store_true",
                default=None,
                help="edge-list vertex ids start at 0 (default)",
            )
            grp.add_argument(
                "--one-indexed",
                action="store_true",
                default=None,
                help="edge-list vertex ids start at 1",
            )

    enc = sub.add_parser("encode", help="emit sparse vertex features")
    add_io_flags(enc)
    enc.add_argument("--alpha", type=int, default=1, help="ego-network depth (>= 1)")
    enc.add_argument("--method", choices=("igel", "gamma"), default="igel")
    enc.add_argument(
        "--dcap",
        default="auto",
        help="degree cap: 'auto' (collection-wide max degree) or an integer >= 1",
    )
    enc.add_argument("--out", default=None, help="output path (default stdout)")
    enc.add_argument("--threads", type=int, default=None, help="worker cap")

    srv = sub.add_parser("survey", help="bucket a collection by encoding")
    add_io_flags(srv)
    srv.add_argument(
        "--method", choices=("wl", "igel", "igel_concat", "gamma"), default="igel"
    )
    srv.add_argument("--alpha", default="1", help="depth, or comma list for igel_concat")
    srv.add_argument("--wl-iters", type=int, default=None, help="cap refinement rounds")
    srv.add_argument(
        "--verify",
        action="store_true",
        help="run the exact isomorphism oracle on every colliding pair",
    )
    srv.add_argument("--detail", action="store_true", help="emit one line per collision bucket")
    srv.add_argument("--json", dest="out", default=None, help="report path (default stdout)")
    srv.add_argument("--threads", type=int, default=None, help="worker cap")

    cmp_ = sub.add_parser("compare", help="compare two graphs under one encoder")
    cmp_.add_argument("a", help="first graph file")
    cmp_.add_argument("b", help="second graph file")
    cmp_.add_argument(
        "--format",
        choices=("edgelist", "g6"),
        default=None,
        help="force both input formats (default: per-file extension)",
    )
    cmp_.add_argument(
        "--method", choices=("wl", "igel", "igel_concat", "gamma"), default="igel"
    )
    cmp_.add_argument("--alpha", default="1", help="depth, or comma list for igel_concat")
    cmp_.add_argument("--wl-iters", type=int, default=None)

    gen = sub.add_parser("gen", help="generate a named graph family")
    gen.add_argument(
        "family",
        choices=(
            "path", "cycle", "complete", "star", "rook",
            "shrikhande", "petersen", "paley", "regular", "gnp",
        ),
    )
    gen.add_argument("params", nargs="*", help="family parameters (see --help)")
    gen.add_argument("--seed", type=int, default=0, help="seed for random families")
    gen.add_argument("--out-format", choices=("edgelist", "g6"), default="edgelist")
    gen.add_argument("--out", default=None, help="output path (default stdout)")

    ref = sub.add_parser("refine", help="dump color-refinement histograms")
    add_io_flags(ref)
    ref.add_argument("--max-iters", type=int, default=None)
    ref.add_argument("--out", default=None, help="output path (default stdout)")

    return parser


def _resolve_indexing(args) -> bool:
    fmt = _infer_format(args.input, args.format) if hasattr(args, "input") else "edgelist"
    zero = getattr(args, "zero_indexed", None)
    one = getattr(args, "one_indexed", None)
    if fmt == "g6" and (zero is not None or one is not None):
        raise UsageError("indexing flags apply to edge-list input only")
    return not bool(one)


def cmd_encode(args) -> int:
    fmt = _infer_format(args.input, args.format)
    zero_indexed = _resolve_indexing(args)
    if args.alpha < 1:
        raise UsageError(f"--alpha must be >= 1, got {args.alpha}")
    if args.dcap != "auto":
        try:
            dcap = int(args.dcap)
        except ValueError:
            raise UsageError(f"--dcap expects 'auto' or an integer, got {args.dcap!r}") from None
        if dcap < 1:
            raise UsageError(f"--dcap must be >= 1, got {dcap}")
    else:
        dcap = "auto"
    coll = _load_collection(args.input, fmt, zero_indexed)
    encoder = IgelEncoder(
        alpha=args.alpha,
        method=args.method,
        degree_cap=dcap,
        workers=args.threads or _default_threads(),
    )
    encoder.fit(list(coll.graphs))
    print(f"dcap={encoder.degree_cap_}", file=sys.stderr)

    out, close = _open_out(args.out)
    try:
        out.write(f"# dcap={encoder.degree_cap_} alpha={args.alpha} method={args.method}\n")
        multi = fmt == "g6"
        for i, graph in enumerate(coll.graphs):
            if multi:
                if i:
                    out.write("\n")
                out.write(f"# graph {i}\n")
            (mat,) = encoder.transform_per_graph([graph])
            indptr, indices, data = mat.indptr, mat.indices, mat.data
            for v in range(graph.n):
                cells = " ".join(
                    f"{indices[k]}:{data[k]}" for k in range(indptr[v], indptr[v + 1])
                )
                out.write(f"{v} {cells}\n" if cells else f"{v}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_survey(args) -> int:
    fmt = _infer_format(args.input, args.format)
    zero_indexed = _resolve_indexing(args)
    spec = _make_spec(args.method, args.alpha, args.wl_iters)
    coll = _load_collection(args.input, fmt, zero_indexed)
    report = run_survey(coll, spec, verify=args.verify, workers=args.threads or _default_threads())
    out, close = _open_out(args.out)
    try:
        out.write(json.dumps(report.summary()) + "\n")
        if args.detail:
            for h, idxs in sorted(report.collision_buckets().items()):
                out.write(json.dumps({"hash": h, "graphs": idxs}) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_compare(args) -> int:
    spec = _make_spec(args.method, args.alpha, args.wl_iters)
    ga = _load_single(args.a, _infer_format(args.a, args.format), True)
    gb = _load_single(args.b, _infer_format(args.b, args.format), True)
    result = pairwise_compare(ga, gb, spec)
    line = result.verdict()
    if result.witness:
        line += f" ({result.witness})"
    print(line)
    return EXIT_EQUIVALENT if result.equivalent else EXIT_OK


def _gen_graph(args) -> Graph:
    fam = args.family
    params = args.params

    def want(k: int) -> list[int]:
        if len(params) != k:
            raise UsageError(f"family {fam!r} takes {k} parameter(s), got {len(params)}")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError(f"family {fam!r} needs integer parameters, got {params}") from None

    if fam == "path":
        return families.gen_path(*want(1))
    if fam == "cycle":
        return families.gen_cycle(*want(1))
    if fam == "complete":
        return families.gen_complete(*want(1))
    if fam == "star":
        return families.gen_star(*want(1))
    if fam == "rook":
        return families.gen_rook(*want(1))
    if fam == "shrikhande":
        want(0)
        return families.gen_shrikhande()
    if fam == "petersen":
        want(0)
        return families.gen_petersen()
    if fam == "paley":
        return families.gen_paley(*want(1))
    if fam == "regular":
        n, d = want(2)
        return families.gen_random_regular(n, d, args.seed)
    if fam == "gnp":
        if len(params) != 2:
            raise UsageError(f"family 'gnp' takes n and p, got {len(params)} parameter(s)")
        try:
            n, p = int(params[0]), float(params[1])
        except ValueError:
            raise UsageError(f"family 'gnp' needs (int, float), got {params}") from None
        return families.gen_gnp(n, p, args.seed)
    raise UsageError(f"unknown family {fam!r}")


def cmd_gen(args) -> int:
    graph = _gen_graph(args)
    out, close = _open_out(args.out)
    try:
        if args.out_format == "g6":
            out.write(write_graph6(graph) + "\n")
        else:
            out.write(write_edge_list(graph))
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_refine(args) -> int:
    fmt = _infer_format(args.input, args.format)
    zero_indexed = _resolve_indexing(args)
    coll = _load_collection(args.input, fmt, zero_indexed)
    out, close = _open_out(args.out)
    try:
        for i, graph in enumerate(coll.graphs):
            coloring = wl_refine(graph, args.max_iters)
            out.write(
                json.dumps(
                    {
                        "graph": i,
                        "n": graph.n,
                        "color_classes": coloring.num_colors(),
                        "iterations": coloring.iterations,
                        "stabilized": coloring.stabilized,
                        "class_sizes": list(coloring.class_sizes()),
                    }
                )
                + "\n"
            )
    finally:
        if close:
            out.close()
    return EXIT_OK


_COMMANDS = {
    "encode": cmd_encode,
    "survey": cmd_survey,
    "compare": cmd_compare,
    "gen": cmd_gen,
    "refine": cmd_refine,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
