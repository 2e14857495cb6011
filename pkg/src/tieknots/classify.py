"""Naming tie knots.

Knot types are identified by fingerprint: the Jones polynomial up to
``q -> 1/q`` together with the determinant, matched against a table of
reference diagrams. Families (unknot, trefoil, twist, torus) are also read
directly off the reduced word.
"""

from __future__ import annotations

import enum
import io
import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import BinaryIO, Iterable, Optional, Union

from .diagram import build_diagram
from .grammar import Direction, TieSequence, format_sequence
from .invariants import determinant, jones_polynomial
from .laurent import LaurentPolynomial
from .pdcode import MalformedPDError, PDCode
from .rewrite import ReducedWord, reduce_fully

__all__ = [
    "Chirality",
    "KnotName",
    "Fingerprint",
    "ReferenceEntry",
    "ReferenceTable",
    "ReferenceTableError",
    "ClassificationError",
    "FamilyKind",
    "FamilyReport",
    "Classification",
    "load_reference_table",
    "load_default_table",
    "fingerprint_of",
    "classify_pd",
    "classify_sequence",
    "classify_full",
    "recognize_family",
    "is_two_bridge_listed",
    "TABLE_ENV",
]

TABLE_ENV = "TIEKNOT_TABLE"


class ReferenceTableError(ValueError):
    pass


class ClassificationError(ValueError):
    pass


class Chirality(enum.Enum):
    SameAsReference = "same"
    MirrorOfReference = "mirror"
    Amphichiral = "amphichiral"


_NAME = re.compile(r"^(\d+)_(\d+)$")


@dataclass(frozen=True)
class KnotName:
    crossing_number: int
    table_index: int
    chirality: Chirality = Chirality.SameAsReference

    def __post_init__(self) -> None:
        if self.crossing_number < 0 or self.table_index < 1:
            raise ValueError(f"bad knot name {self.crossing_number}_{self.table_index}")

    @classmethod
    def parse(cls, text: str, chirality: Chirality = Chirality.SameAsReference) -> "KnotName":
        m = _NAME.match(text.strip())
        if not m:
            raise ValueError(f"knot names look like 3_1, got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), chirality)

    @property
    def base(self) -> str:
        return f"{self.crossing_number}_{self.table_index}"

    def sort_key(self) -> tuple[int, int]:
        return self.crossing_number, self.table_index

    def __str__(self) -> str:
        return self.base


@dataclass(frozen=True)
class Fingerprint:
    jones: LaurentPolynomial
    determinant: int

    def key(self) -> tuple[tuple[str, str], int]:
        """Mirror-blind form: the unordered pair {V(q), V(1/q)} and det."""
        a, b = str(self.jones), str(self.jones.inverted())
        return (min(a, b), max(a, b)), self.determinant


def fingerprint_of(pd: PDCode) -> Fingerprint:
    return Fingerprint(jones_polynomial(pd), determinant(pd))


@dataclass(frozen=True)
class ReferenceEntry:
    name: str
    pd: PDCode
    fingerprint: Fingerprint


@dataclass(frozen=True)
class ReferenceTable:
    entries: tuple[ReferenceEntry, ...]
    _by_key: dict = field(repr=False, compare=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def lookup(self, fp: Fingerprint) -> Optional[ReferenceEntry]:
        return self._by_key.get(fp.key())


def load_reference_table(source: Union[BinaryIO, bytes, str]) -> ReferenceTable:
    """Read JSON lines ``{"name": "6_2", "pd": [[...], ...]}``.

    ``source`` is a binary stream, raw bytes or text. Duplicate names,
    malformed PD codes and two entries sharing a fingerprint are errors.
    """
    if isinstance(source, (bytes, bytearray)):
        text = bytes(source).decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    entries: list[ReferenceEntry] = []
    by_key: dict = {}
    seen: set[str] = set()
    for lineno, line in enumerate(io.StringIO(text), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            name = str(row["name"])
            pd = PDCode.from_list(row["pd"])
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ReferenceTableError(f"line {lineno}: cannot read entry ({exc})") from exc
        except MalformedPDError as exc:
            raise ReferenceTableError(f"line {lineno}: malformed PD for {row.get('name')}: {exc}") from exc
        KnotName.parse(name)
        if name in seen:
            raise ReferenceTableError(f"line {lineno}: duplicate knot name {name}")
        seen.add(name)
        fp = fingerprint_of(pd)
        clash = by_key.get(fp.key())
        if clash is not None:
            raise ReferenceTableError(f"line {lineno}: {name} has the same fingerprint as {clash.name}")
        entry = ReferenceEntry(name, pd, fp)
        entries.append(entry)
        by_key[fp.key()] = entry
    return ReferenceTable(tuple(entries), by_key)


def load_default_table(path: Optional[str] = None) -> ReferenceTable:
    """The shipped table, or ``path`` / ``$TIEKNOT_TABLE`` when given."""
    path = path or os.environ.get(TABLE_ENV)
    if path:
        try:
            with open(path, "rb") as fh:
                return load_reference_table(fh)
        except OSError as exc:
            raise ReferenceTableError(f"cannot read reference table {path}: {exc}") from exc
    data = resources.files("tieknots").joinpath("data/reference_knots.jsonl").read_bytes()
    return load_reference_table(data)


# ---------------------------------------------------------------------------


def classify_pd(pd: PDCode, table: ReferenceTable) -> KnotName:
    fp = fingerprint_of(pd)
    entry = table.lookup(fp)
    if entry is None:
        raise ClassificationError(
            f"no reference knot has determinant {fp.determinant} and Jones {fp.jones}"
        )
    ref = entry.fingerprint.jones
    if ref == ref.inverted():
        chirality = Chirality.Amphichiral
    elif fp.jones == ref:
        chirality = Chirality.SameAsReference
    else:
        chirality = Chirality.MirrorOfReference
    return KnotName.parse(entry.name, chirality)


def classify_sequence(seq: TieSequence, table: ReferenceTable) -> KnotName:
    """Reduce, draw, fingerprint and look up ``seq``."""
    return classify_full(seq, table).knot


class FamilyKind(enum.Enum):
    Unknot = "unknot"
    Trefoil = "trefoil"
    Twist = "twist"
    Torus = "torus"
    None_ = "none"


@dataclass(frozen=True)
class FamilyReport:
    """Family read from the reduced word.

    A trefoil also carries its twist form (n = 1) and torus parameter 3.
    """

    kind: FamilyKind
    handedness: Optional[str] = None  # "right" or "left", trefoils only
    twist_form: Optional[int] = None
    twists: Optional[int] = None
    torus_p: Optional[int] = None

    @property
    def is_twist(self) -> bool:
        return self.twist_form is not None

    @property
    def is_torus(self) -> bool:
        return self.torus_p is not None

    def label(self) -> str:
        if self.kind is FamilyKind.Trefoil:
            return f"trefoil/{self.handedness}"
        if self.kind is FamilyKind.Twist:
            return f"twist/{self.twist_form}/n={self.twists}"
        if self.kind is FamilyKind.Torus:
            return f"torus/2,{self.torus_p}"
        return self.kind.value


_TORUS = re.compile(r"^LC(LC)*[LR*]$")
_TWIST1 = re.compile(r"^L(RL)*R?C[LR*]$")
_TWIST2 = re.compile(r"^LRC(RC)*[LR*]$")
_TWIST3 = re.compile(r"^LC(RC)*[LR*]$")


def _twist(regions: str) -> tuple[Optional[int], Optional[int]]:
    n = len(regions) - 2
    one = _TWIST1.match(regions) is not None
    other = 2 if _TWIST2.match(regions) else (3 if _TWIST3.match(regions) else None)
    if one and other:
        # LC* and LRC* fit two forms; a t1 ending comes from reduction I
        # alone and is read as form 1
        return (1, n) if regions.endswith("*") else (other, n)
    if one:
        return 1, n
    if other:
        return other, n
    return None, None


def family_of_word(word: ReducedWord) -> FamilyReport:
    if word.is_empty:
        return FamilyReport(FamilyKind.Unknot)
    regions = word.regions
    form, n = _twist(regions)
    p = len(regions) if _TORUS.match(regions) else None
    if len(regions) == 3:
        hand = "right" if word.moves[0].direction is Direction.In else "left"
        return FamilyReport(FamilyKind.Trefoil, hand, form, n, p)
    if form is not None:
        return FamilyReport(FamilyKind.Twist, None, form, n, None)
    if p is not None:
        return FamilyReport(FamilyKind.Torus, None, None, None, p)
    return FamilyReport(FamilyKind.None_)


def recognize_family(seq: TieSequence) -> FamilyReport:
    """Unknot, trefoil, twist or (2,p) torus knot, judged only by the
    shape of the reduced word."""
    word, _ = reduce_fully(seq)
    return family_of_word(word)


_NOT_TWO_BRIDGE_8 = {5, 10} | set(range(15, 22))


def is_two_bridge_listed(name: KnotName) -> bool:
    """Whether ``name`` is outside the 3-bridge knots of at most 8 crossings."""
    if name.crossing_number > 8:
        raise ValueError(f"{name} is beyond the 8-crossing list")
    return not (name.crossing_number == 8 and name.table_index in _NOT_TWO_BRIDGE_8)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    sequence: TieSequence
    reduced: ReducedWord
    knot: KnotName
    family: FamilyReport
    determinant: int
    jones: LaurentPolynomial

    def to_dict(self) -> dict:
        return {
            "sequence": format_sequence(self.sequence),
            "reduced": str(self.reduced),
            "knot": self.knot.base,
            "chirality": self.knot.chirality.value,
            "family": self.family.label(),
            "determinant": self.determinant,
            "jones": str(self.jones),
        }


def classify_full(seq: TieSequence, table: ReferenceTable) -> Classification:
    word, _ = reduce_fully(seq)
    pd = build_diagram(word).pd
    knot = classify_pd(pd, table)
    return Classification(seq, word, knot, family_of_word(word), determinant(pd), jones_polynomial(pd))


def sort_names(names: Iterable[str]) -> list[str]:
    return sorted(set(names), key=lambda s: KnotName.parse(s).sort_key())
