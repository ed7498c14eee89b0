"""Command line: ``sharksfin {classify,normal-form,plot,batch} ...``.

Exit status: 0 when a report was produced (whatever the verdict),
1 when the input violates a precondition of the command, 2 for
unreadable or malformed documents and bad flags.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from sharksfin.document import DocumentError, read_document
from sharksfin.plot import DEFAULT_RESOLUTION, DEFAULT_WINDOW, PlotError, singular_image, write_polylines, write_svg
from sharksfin.report import SCHEMA, ReportError, classify_report, normal_form_report, render, render_machine

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_PARSE = 2


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=_positive_int, default=None,
                        help="truncation order of the jet (default: the document's, else 4)")
    common.add_argument("--mode", choices=("exact", "float"), default=None,
                        help="arithmetic; default is exact unless the document has decimals")
    common.add_argument("--tolerance", type=float, default=1e-9,
                        help="zero threshold for floating arithmetic (default 1e-9)")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    p = argparse.ArgumentParser(prog="sharksfin", description="Recognize sharksfin and deltoid map germs.")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("classify", parents=[common], help="classify one document")
    c.add_argument("document")
    n = sub.add_parser("normal-form", parents=[common], help="normal form and cusp invariants")
    n.add_argument("document")
    pl = sub.add_parser("plot", parents=[common], help="draw f(S(f)) as SVG plus polylines")
    pl.add_argument("document")
    pl.add_argument("--window", type=float, default=DEFAULT_WINDOW, help="half-width of the source window")
    pl.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION, help="grid points per side")
    pl.add_argument("-o", "--output", default=None, help="SVG path (default: <document>.svg)")
    b = sub.add_parser("batch", parents=[common], help="classify every document in a directory")
    b.add_argument("directory")
    b.add_argument("--workers", type=_positive_int, default=1)
    return p


def _err(msg: str) -> None:
    print(f"sharksfin: {msg}", file=sys.stderr)


def _load(path):
    try:
        return read_document(path)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def _cmd_report(args, build) -> int:
    try:
        doc = _load(args.document)
        rep = build(doc, args.order, args.mode, args.tolerance)
    except DocumentError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except ReportError as exc:
        _err(str(exc))
        return EXIT_PRECONDITION
    sys.stdout.write(render(rep, args.format))
    return EXIT_OK


def _cmd_plot(args) -> int:
    try:
        doc = _load(args.document)
    except DocumentError as exc:
        _err(str(exc))
        return EXIT_PARSE
    try:
        rep = classify_report(doc, args.order, args.mode, args.tolerance)
        f = doc.germ(args.order, rep["arithmetic"]["mode"] == "floating")
        img = singular_image(f, args.window, args.resolution, args.tolerance)
    except (ReportError, PlotError, DocumentError) as exc:
        _err(str(exc))
        return EXIT_PRECONDITION
    svg = Path(args.output) if args.output else Path(args.document).with_suffix(".svg")
    poly = svg.with_suffix(".polyline.txt")
    write_svg(img, svg, title=f"{Path(args.document).name}: {img.verdict}")
    write_polylines(img, poly)
    out = {"schema": SCHEMA, "command": "plot", "verdict": img.verdict, "svg": str(svg),
           "polylines": str(poly), "curves": len(img.image_lines), "cusps": len(img.cusps)}
    if img.point is not None:
        out["note"] = img.note
    if args.format == "machine":
        sys.stdout.write(render_machine(out))
    else:
        sys.stdout.write("".join(f"{k}: {v}\n" for k, v in out.items() if k != "schema"))
    return EXIT_OK


# -- batch ----------------------------------------------------------------------

def _batch_one(job) -> dict:
    path, order, mode, tol = job
    entry = {"file": Path(path).name}
    try:
        entry["report"] = classify_report(_load(path), order, mode, tol)
    except (DocumentError, ReportError) as exc:
        entry["error"] = str(exc)
    return entry


def batch_reports(directory, workers: int = 1, order: int | None = None, mode: str | None = None,
                  tol: float = 1e-9) -> dict:
    """Reports for every visible regular file, in file-name order."""
    root = Path(directory)
    if not root.is_dir():
        raise DocumentError(f"not a directory: {directory}")
    files = sorted(p for p in root.iterdir() if p.is_file() and not p.name.startswith("."))
    jobs = [(str(p), order, mode, tol) for p in files]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_batch_one, jobs, chunksize=1))
    else:
        entries = [_batch_one(j) for j in jobs]
    hist = Counter(e["report"]["verdict"] for e in entries if "report" in e)
    return {
        "schema": SCHEMA,
        "command": "batch",
        "documents": len(entries),
        "errors": sum("error" in e for e in entries),
        "histogram": dict(sorted(hist.items())),
        "entries": entries,
    }


def _batch_text(summary: dict) -> str:
    lines = []
    width = max((len(e["file"]) for e in summary["entries"]), default=4)
    for e in summary["entries"]:
        status = e["report"]["verdict"] if "report" in e else f"error: {e['error']}"
        lines.append(f"{e['file']:<{width}}  {status}")
    lines.append(f"documents: {summary['documents']}  errors: {summary['errors']}")
    lines.append("histogram: " + json.dumps(summary["histogram"], sort_keys=True))
    return "\n".join(lines) + "\n"


def _cmd_batch(args) -> int:
    try:
        summary = batch_reports(args.directory, args.workers, args.order, args.mode, args.tolerance)
    except DocumentError as exc:
        _err(str(exc))
        return EXIT_PARSE
    sys.stdout.write(render_machine(summary) if args.format == "machine" else _batch_text(summary))
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if args.command == "classify":
        return _cmd_report(args, classify_report)
    if args.command == "normal-form":
        return _cmd_report(args, normal_form_report)
    if args.command == "plot":
        return _cmd_plot(args)
    return _cmd_batch(args)


if __name__ == "__main__":
    sys.exit(main())
