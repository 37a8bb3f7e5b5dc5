"""causemap command-line interface.

    causemap ingest  --in comments.jsonl --out snap.bin [--cap 200]
    causemap extract --snapshot snap.bin [--paper-shape] [--out rel.json]
    causemap graph macro   --snapshot snap.bin --role cause --sample 0.1
                           --seed 42 [--min-weight 1] --format gexf|json
                           --out FILE
    causemap graph micro   --snapshot snap.bin --cause "nuclear power"
                           --format json --out FILE
    causemap graph overlay --snapshot snap.bin [--user-a ID --user-b ID]
                           [--top 2] [--role cause] [--format json]
                           --out FILE
    causemap serve   --snapshot snap.bin --port 8080 [--static DIR]

Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to
stderr; requested payloads go to --out or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graphio, landscape, snapshot as snapshot_mod
from .corpus import IngestConfig, IngestError
from .framex import relations_to_json_obj
from .landscape import CAUSE, EFFECT, MACRO, MICRO, OVERLAY, ViewSpec
from .snapshot import SnapshotError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="causemap",
                     description="Opinion observatory over comment corpora.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p_ingest = sub.add_parser("ingest", help="ingest JSONL into a snapshot")
    p_ingest.add_argument("--in", dest="input", required=True)
    p_ingest.add_argument("--out", dest="output", required=True)
    p_ingest.add_argument("--cap", type=int, default=200,
                          help="max comments kept per article")

    p_extract = sub.add_parser("extract",
                               help="emit extracted causal relations")
    p_extract.add_argument("--snapshot", required=True)
    p_extract.add_argument("--paper-shape", action="store_true",
                           help="emit only utterance/cause/effect")
    p_extract.add_argument("--out", dest="output")

    p_graph = sub.add_parser("graph", help="render a belief-graph view")
    graph_sub = p_graph.add_subparsers(dest="view_kind", required=True,
                                       parser_class=_Parser)

    def add_common(p):
        p.add_argument("--snapshot", required=True)
        p.add_argument("--min-weight", type=int, default=1)
        p.add_argument("--format", choices=("gexf", "json"), default="json")
        p.add_argument("--out", dest="output", required=True)
        p.add_argument("--iterations", type=int, default=None,
                       help="layout iterations (default 500)")

    p_macro = graph_sub.add_parser("macro")
    add_common(p_macro)
    p_macro.add_argument("--role", choices=("cause", "effect"),
                         default="cause")
    p_macro.add_argument("--sample", type=float, default=1.0)
    p_macro.add_argument("--seed", type=int, default=0)

    p_micro = graph_sub.add_parser("micro")
    add_common(p_micro)
    p_micro.add_argument("--cause", required=True, dest="cause_query")
    p_micro.add_argument("--seed", type=int, default=0)

    p_overlay = graph_sub.add_parser("overlay")
    add_common(p_overlay)
    p_overlay.add_argument("--user-a")
    p_overlay.add_argument("--user-b")
    p_overlay.add_argument("--top", type=int, default=2,
                           help="rank of most-active commenters used when "
                                "--user-a/--user-b are omitted")
    p_overlay.add_argument("--role", choices=("cause", "effect"),
                           default="cause")
    p_overlay.add_argument("--seed", type=int, default=0)

    p_serve = sub.add_parser("serve", help="serve the read-only HTTP API")
    p_serve.add_argument("--snapshot", required=True)
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", dest="static_dir",
                         help="directory of built explorer assets")
    p_serve.add_argument("--node-cap", type=int, default=5000)
    return parser


def _write_output(data: bytes, output: str | None) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _load_snapshot(path: str):
    try:
        return snapshot_mod.load(path)
    except SnapshotError as exc:
        print(f"causemap: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_DATA)


def _cmd_ingest(args) -> int:
    if args.cap < 1:
        print("causemap: --cap must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    config = IngestConfig(max_comments_per_article=args.cap)
    try:
        with open(args.input, "rb") as fh:
            snap = snapshot_mod.ingest_to_snapshot(fh, config)
    except FileNotFoundError:
        print(f"causemap: no such input file: {args.input}", file=sys.stderr)
        return EXIT_DATA
    except IngestError as exc:
        print(f"causemap: {exc}", file=sys.stderr)
        return EXIT_DATA
    snapshot_mod.save(snap, args.output)
    report = snap.corpus.ingest_report
    print(f"ingested {report.accepted_articles} articles, "
          f"{report.accepted_comments} comments "
          f"({report.rejected_total} rejected), "
          f"{len(snap.relations)} causal relations -> {args.output}",
          file=sys.stderr)
    return EXIT_OK


def _cmd_extract(args) -> int:
    snap = _load_snapshot(args.snapshot)
    obj = relations_to_json_obj(snap.relations, paper_shape=args.paper_shape)
    data = (json.dumps(obj, indent=4, ensure_ascii=False) + "\n") \
        .encode("utf-8")
    _write_output(data, args.output)
    return EXIT_OK


def _make_view(args) -> ViewSpec:
    if args.view_kind == "macro":
        return ViewSpec(kind=MACRO,
                        role=CAUSE if args.role == "cause" else EFFECT,
                        sample_fraction=args.sample, seed=args.seed,
                        min_weight=args.min_weight)
    if args.view_kind == "micro":
        return ViewSpec(kind=MICRO, role=EFFECT, seed=args.seed,
                        cause_query=args.cause_query,
                        min_weight=args.min_weight)
    return ViewSpec(kind=OVERLAY,
                    role=CAUSE if args.role == "cause" else EFFECT,
                    seed=args.seed, user_a=args.user_a, user_b=args.user_b,
                    min_weight=args.min_weight)


def _cmd_graph(args) -> int:
    snap = _load_snapshot(args.snapshot)
    if args.view_kind == "overlay" and not (args.user_a and args.user_b):
        if args.top < 2:
            print("causemap: --top must be >= 2", file=sys.stderr)
            return EXIT_USAGE
        top = landscape.top_commenters(snap.corpus, snap.relations, args.top)
        if len(top) < 2:
            print("causemap: corpus has fewer than two commenters",
                  file=sys.stderr)
            return EXIT_DATA
        args.user_a, args.user_b = top[0], top[1]
        print(f"causemap: overlaying most active commenters "
              f"{args.user_a!r} and {args.user_b!r}", file=sys.stderr)
    view = _make_view(args)
    try:
        view.validate()
    except ValueError as exc:
        print(f"causemap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    iterations = args.iterations
    if iterations is None:
        iterations = graphio.DEFAULT_ITERATIONS
    try:
        data = snapshot_mod.render_view(snap, view, fmt=args.format,
                                        iterations=iterations)
    except ValueError as exc:
        print(f"causemap: {exc}", file=sys.stderr)
        return EXIT_DATA
    _write_output(data, args.output)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    snap = _load_snapshot(args.snapshot)
    app = create_app(snap, node_cap=args.node_cap,
                     static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def cli_run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "ingest":
            return _cmd_ingest(args)
        if args.command == "extract":
            return _cmd_extract(args)
        if args.command == "graph":
            return _cmd_graph(args)
        if args.command == "serve":
            return _cmd_serve(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_DATA
    except BrokenPipeError:
        return EXIT_OK
    return EXIT_USAGE


def main() -> None:
    raise SystemExit(cli_run())


if __name__ == "__main__":
    main()
