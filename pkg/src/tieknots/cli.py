"""Command-line interface: ``tieknots <command> ...``.

Exit status is 0 on success, 1 for a domain error (bad sequence, missing
reference table, failed verification) and 2 for a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classify import ClassificationError, ReferenceTableError, classify_full, load_default_table
from .diagram import DiagramError, build_diagram, to_gauss_code, to_pd_code
from .grammar import (
    DEFAULT_MAX_MOVES,
    SequenceSyntaxError,
    enumerate_sequences,
    format_sequence,
    parse_sequence,
    validate_fm,
)
from .rewrite import DiagramWord, RewriteError, reduce_fully

__all__ = ["main", "execute_command"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise _UsageError(f"{self.prog}: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tieknots", description="Tie sequences as knots.")
    p.add_argument("--table-path", help="reference knot table (JSON lines); also $TIEKNOT_TABLE")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list every valid tie sequence in a move range")
    e.add_argument("--min", type=int, default=3)
    e.add_argument("--max", type=int, default=DEFAULT_MAX_MOVES)
    e.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("validate", help="check a sequence against the tying rules")
    v.add_argument("sequence")
    v.add_argument("--max-moves", type=int, default=DEFAULT_MAX_MOVES)

    r = sub.add_parser("reduce", help="reduce a sequence to normal form")
    r.add_argument("sequence")
    r.add_argument("--trace", action="store_true", help="also print each rewrite step as a JSON line")

    d = sub.add_parser("diagram", help="PD or Gauss code of a sequence or reduced word")
    d.add_argument("sequence")
    d.add_argument("--format", choices=("pd", "gauss"), default="pd")
    d.add_argument("--reduced", action="store_true", help="draw the reduced word instead")

    c = sub.add_parser("classify", help="knot type of a sequence")
    c.add_argument("sequence")
    c.add_argument("--table-path", dest="table_path_sub")

    t = sub.add_parser("table", help="the 85-row table or its summaries")
    which = t.add_mutually_exclusive_group(required=True)
    which.add_argument("--appendix", action="store_true")
    which.add_argument("--summary", action="store_true")
    t.add_argument("--format", choices=("csv", "json", "text"), default=None)
    t.add_argument("--table-path", dest="table_path_sub")

    s = sub.add_parser("render", help="SVG picture of a diagram")
    s.add_argument("sequence")
    s.add_argument("--reduced", action="store_true")
    s.add_argument("--format", choices=("svg",), default="svg")

    f = sub.add_parser("verify", help="run the acceptance checks")
    f.add_argument("--table-path", dest="table_path_sub")
    return p


def _word(text: str):
    """A tie sequence when the text is one, otherwise a diagram word."""
    w = DiagramWord.parse(text)
    if w.t1 or not w.tucked:
        return w
    return parse_sequence(text)


def _table(args):
    return load_default_table(getattr(args, "table_path_sub", None) or args.table_path)


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "enumerate":
        seqs = enumerate_sequences(args.min, args.max)
        texts = [format_sequence(s) for s in seqs]
        out.write(json.dumps(texts) + "\n" if args.format == "json" else "".join(t + "\n" for t in texts))
        return 0
    if cmd == "validate":
        report = validate_fm(parse_sequence(args.sequence), max_moves=args.max_moves)
        out.write(json.dumps(report.to_dict(), ensure_ascii=False) + "\n")
        return 0 if report.valid else 1
    if cmd == "reduce":
        word, trace = reduce_fully(parse_sequence(args.sequence))
        out.write(str(word) + "\n")
        if args.trace:
            out.write(trace.to_jsonl())
        return 0
    if cmd in ("diagram", "render"):
        w = _word(args.sequence)
        if args.reduced:
            if isinstance(w, DiagramWord):
                raise RewriteError("--reduced needs a full tie sequence")
            w, _ = reduce_fully(w)
        d = build_diagram(w)
        if cmd == "render":
            from .render import render_svg

            out.write(render_svg(d, title=str(w)))
        elif args.format == "pd":
            out.write(to_pd_code(d).to_json() + "\n")
        else:
            out.write(str(to_gauss_code(d)) + "\n")
        return 0
    if cmd == "classify":
        result = classify_full(parse_sequence(args.sequence), _table(args))
        out.write(json.dumps(result.to_dict(), ensure_ascii=False) + "\n")
        return 0
    if cmd == "table":
        from .tables import CSV_HEADER, appendix_csv, compute_appendix, summarize, summary_text

        rows = compute_appendix(_table(args))
        if args.appendix:
            if args.format == "json":
                out.write(json.dumps([dict(zip(CSV_HEADER, r.as_tuple())) for r in rows]) + "\n")
            else:
                out.write(appendix_csv(rows))
        else:
            summary = summarize(rows)
            out.write(json.dumps(summary) + "\n" if args.format == "json" else summary_text(summary))
        return 0
    if cmd == "verify":
        from .acceptance import run_all

        results = run_all(_table(args))
        for r in results:
            out.write(r.line() + "\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} criteria passed\n")
        return 0 if passed == len(results) else 1
    raise _UsageError(f"unknown command {cmd}")


def execute_command(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(list(argv))
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    try:
        return _run(args, out)
    except (
        SequenceSyntaxError,
        RewriteError,
        DiagramError,
        ClassificationError,
        ReferenceTableError,
        ValueError,
    ) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    return execute_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
