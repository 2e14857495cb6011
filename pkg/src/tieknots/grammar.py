"""Tie moves, tie sequences and the rules a well-formed sequence obeys.

The text form is a run of two-character tokens over ``{L,R,C} x {i,o}``
optionally followed by ``T`` (the tuck). The canonical rendering uses no
separators, e.g. ``LiRoLiCoT``; parsing also accepts underscores,
whitespace and any letter case, so ``"L_iR_oL_iC_oT"`` and
``"li ro li co t"`` both work.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

__all__ = [
    "Region",
    "Direction",
    "TieMove",
    "TieSequence",
    "Violation",
    "ValidationReport",
    "SequenceSyntaxError",
    "parse_sequence",
    "format_sequence",
    "validate_fm",
    "enumerate_sequences",
    "FLAT_FACADES",
    "DEFAULT_MAX_MOVES",
]

DEFAULT_MAX_MOVES = 9


class Region(enum.Enum):
    L = "L"
    R = "R"
    C = "C"

    def __str__(self) -> str:
        return self.value


class Direction(enum.Enum):
    """``In`` means the active strand passes over the passive strand."""

    In = "i"
    Out = "o"

    def flipped(self) -> "Direction":
        return Direction.Out if self is Direction.In else Direction.In

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TieMove:
    region: Region
    direction: Direction

    @property
    def is_in(self) -> bool:
        return self.direction is Direction.In

    def flipped(self) -> "TieMove":
        return TieMove(self.region, self.direction.flipped())

    @classmethod
    def of(cls, token: str) -> "TieMove":
        return cls(Region(token[0].upper()), Direction(token[1].lower()))

    def __str__(self) -> str:
        return f"{self.region.value}{self.direction.value}"


@dataclass(frozen=True)
class TieSequence:
    moves: tuple[TieMove, ...]
    tucked: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        if self.tucked and not self.moves:
            raise ValueError("a tucked sequence needs at least one move")

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[TieMove]:
        return iter(self.moves)

    def __str__(self) -> str:
        return format_sequence(self)

    @property
    def regions(self) -> str:
        return "".join(m.region.value for m in self.moves)

    @classmethod
    def from_tokens(cls, tokens: Sequence[str], tucked: bool = True) -> "TieSequence":
        return cls(tuple(TieMove.of(t) for t in tokens), tucked)


class SequenceSyntaxError(ValueError):
    """Raised for text that is not a tie sequence; ``offset`` is a byte offset."""

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message)
        self.offset = offset


_SEPARATORS = " \t\r\n_"


def parse_sequence(text: str) -> TieSequence:
    """Parse the textual form of a tie sequence.

    Raises:
        SequenceSyntaxError: on an unknown token (the offset of its first
            byte is reported), a ``T`` that is not the last token, or input
            with no tokens at all.
    """
    raw = text.encode("utf-8")
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(raw):
        ch = chr(raw[pos])
        if ch in _SEPARATORS:
            pos += 1
            continue
        if ch in "tT":
            tokens.append(("T", pos))
            pos += 1
            continue
        # region letter, optionally separated from its direction by "_"
        j = pos + 1
        while j < len(raw) and chr(raw[j]) == "_":
            j += 1
        if ch.upper() in "LRC" and j < len(raw) and chr(raw[j]).lower() in "io":
            tokens.append((ch.upper() + chr(raw[j]).lower(), pos))
            pos = j + 1
            continue
        end = pos + 1
        while end < len(raw) and chr(raw[end]) not in _SEPARATORS:
            end += 1
            if end - pos == 2:
                break
        bad = raw[pos:end].decode("utf-8", errors="replace")
        raise SequenceSyntaxError(f"unknown token {bad!r} at offset {pos}", pos)

    if not tokens:
        raise SequenceSyntaxError("empty tie sequence", 0)
    for k, (tok, off) in enumerate(tokens):
        if tok == "T" and k != len(tokens) - 1:
            raise SequenceSyntaxError(f"tuck 'T' must be the final token (offset {off})", off)
    tucked = tokens[-1][0] == "T"
    moves = [tok for tok, _ in tokens if tok != "T"]
    if tucked and not moves:
        raise SequenceSyntaxError("tuck without any moves", tokens[0][1])
    return TieSequence.from_tokens(moves, tucked)


def format_sequence(seq: TieSequence) -> str:
    return "".join(str(m) for m in seq.moves) + ("T" if seq.tucked else "")


# --- validation ----------------------------------------------------------

FLAT_FACADES = (
    (TieMove.of("Lo"), TieMove.of("Ri"), TieMove.of("Co")),
    (TieMove.of("Ro"), TieMove.of("Li"), TieMove.of("Co")),
)


@dataclass(frozen=True)
class Violation:
    rule: int
    position: int
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def rules(self) -> set[int]:
        return {v.rule for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {"rule": v.rule, "position": v.position, "message": v.message}
                for v in self.violations
            ],
        }


def validate_fm(seq: TieSequence, max_moves: Optional[int] = DEFAULT_MAX_MOVES) -> ValidationReport:
    """Check ``seq`` against the five tying rules.

    Positions are 1-based move indices. ``max_moves=None`` lifts the length
    cap (rule 4). The parity of the first move (``Li`` for an even number
    of moves, ``Lo`` for odd) is reported under rule 0.
    """
    found: list[Violation] = []
    moves = seq.moves
    n = len(moves)

    if n == 0:
        found.append(Violation(0, 1, "sequence has no moves"))
    else:
        if moves[0].region is not Region.L:
            found.append(Violation(0, 1, f"must begin with Li or Lo, got {moves[0]}"))
        elif seq.tucked:
            want = Direction.In if n % 2 == 0 else Direction.Out
            if moves[0].direction is not want:
                found.append(
                    Violation(0, 1, f"{n} moves must start L{want.value}, got {moves[0]}")
                )

    for k in range(1, n):
        prev, cur = moves[k - 1], moves[k]
        if prev.region is cur.region:
            found.append(Violation(1, k + 1, f"region {cur.region} repeated ({prev}{cur})"))
        if prev.direction is cur.direction:
            found.append(Violation(2, k + 1, f"direction does not alternate ({prev}{cur})"))

    if not seq.tucked:
        found.append(Violation(3, n, "sequence must end with the tuck T"))
    elif tuple(moves[-3:]) not in FLAT_FACADES:
        found.append(Violation(3, n, "must end LoRiCoT or RoLiCoT"))

    if max_moves is not None and n > max_moves:
        found.append(Violation(4, n, f"{n} moves exceeds the limit of {max_moves}"))

    found.sort(key=lambda v: (v.position, v.rule))
    return ValidationReport(tuple(found))


# --- enumeration ---------------------------------------------------------

_NEXT_REGIONS = {
    Region.L: (Region.R, Region.C),
    Region.R: (Region.L, Region.C),
    Region.C: (Region.L, Region.R),
}


def _walks(length: int) -> Iterator[tuple[TieMove, ...]]:
    def grow(prefix: tuple[TieMove, ...]) -> Iterator[tuple[TieMove, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        last = prefix[-1]
        for region in _NEXT_REGIONS[last.region]:
            yield from grow(prefix + (TieMove(region, last.direction.flipped()),))

    for first in Direction:
        yield from grow((TieMove(Region.L, first),))


def enumerate_sequences(min_moves: int = 3, max_moves: int = DEFAULT_MAX_MOVES) -> list[TieSequence]:
    """Every tucked sequence obeying rules 0-3 with ``min_moves..max_moves`` moves.

    Sorted by canonical text.
    """
    if not (3 <= min_moves <= max_moves):
        raise ValueError(f"need 3 <= min_moves <= max_moves, got {min_moves}, {max_moves}")
    found = []
    for n in range(min_moves, max_moves + 1):
        for moves in _walks(n):
            seq = TieSequence(moves, True)
            if validate_fm(seq, max_moves=None).valid:
                found.append(seq)
    found.sort(key=format_sequence)
    return found
