"""The 85-row classification table and its summaries, computed from scratch,
plus loaders for the published versions shipped as data."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .classify import (
    FamilyKind,
    ReferenceTable,
    classify_full,
    load_default_table,
    sort_names,
)
from .grammar import enumerate_sequences, format_sequence

__all__ = [
    "AppendixRow",
    "compute_appendix",
    "published_appendix",
    "appendix_csv",
    "summarize",
    "published_summary",
    "summary_text",
]

CSV_HEADER = ("fm_number", "moves", "sequence", "knot_type", "twist_type")


@dataclass(frozen=True)
class AppendixRow:
    fm_number: int
    moves: int
    sequence: str
    knot_type: str
    twist_type: str  # "" when the knot is not recognised as a twist knot
    family: FamilyKind = FamilyKind.None_  # not part of the CSV

    def as_tuple(self) -> tuple:
        return self.fm_number, self.moves, self.sequence, self.knot_type, self.twist_type


def _data(name: str) -> str:
    return resources.files("tieknots").joinpath(f"data/{name}").read_text("utf-8")


def published_appendix() -> list[AppendixRow]:
    rows = csv.DictReader(io.StringIO(_data("appendix_a.csv")))
    return [
        AppendixRow(int(r["fm_number"]), int(r["moves"]), r["sequence"], r["knot_type"], r["twist_type"])
        for r in rows
    ]


def compute_appendix(table: Optional[ReferenceTable] = None) -> list[AppendixRow]:
    """Classify every sequence of 3..9 moves; rows are numbered as in the
    published list, which orders them by move count then by name."""
    table = table or load_default_table()
    numbering = {r.sequence: r.fm_number for r in published_appendix()}
    rows = []
    for seq in enumerate_sequences(3, 9):
        c = classify_full(seq, table)
        text = format_sequence(seq)
        form = c.family.twist_form
        rows.append(
            AppendixRow(
                numbering.get(text, 0), len(seq), text, c.knot.base, str(form) if form else "", c.family.kind
            )
        )
    rows.sort(key=lambda r: (r.fm_number == 0, r.fm_number, r.sequence))
    return rows


def appendix_csv(rows: list[AppendixRow]) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.as_tuple())
    return out.getvalue()


def summarize(rows: list[AppendixRow]) -> dict:
    """The three summaries in the shipped JSON layout.

    ``table1`` lists knot types by move count. Knot types whose ties fall
    in a named family go to ``table2`` with their tie counts; ``table3``
    groups the rest by how many ties they have.
    """
    families = {r.knot_type for r in rows if r.family is not FamilyKind.None_}
    by_moves: dict[int, set[str]] = defaultdict(set)
    counts: Counter = Counter()
    per_type_moves: dict[str, Counter] = defaultdict(Counter)
    for r in rows:
        by_moves[r.moves].add(r.knot_type)
        counts[r.knot_type] += 1
        per_type_moves[r.knot_type][r.moves] += 1
    table1 = {str(k): sort_names(v) for k, v in sorted(by_moves.items())}
    table2 = {}
    grouped: dict[int, list[str]] = defaultdict(list)
    for name in sort_names(counts):
        if name in families:
            moves = {str(k): v for k, v in sorted(per_type_moves[name].items())}
            table2[name] = [counts[name], moves]
        else:
            grouped[counts[name]].append(name)
    table3 = {str(k): grouped[k] for k in sorted(grouped, reverse=True)}
    return {"table1": table1, "table2": table2, "table3": table3}


def published_summary() -> dict:
    return json.loads(_data("summary_tables.json"))


def summary_text(summary: dict) -> str:
    lines = ["# table 1", "moves,knot_types"]
    for k, names in summary["table1"].items():
        lines.append(f"{k},{' '.join(names)}")
    lines += ["# table 2", "knot_type,tie_knots,by_moves"]
    for name, (n, moves) in summary["table2"].items():
        lines.append(f"{name},{n},{' '.join(f'{c}x{m}' for m, c in moves.items())}")
    lines += ["# table 3", "tie_knots,knot_types"]
    for k, names in summary["table3"].items():
        lines.append(f"{k},{' '.join(names)}")
    return "\n".join(lines) + "\n"

