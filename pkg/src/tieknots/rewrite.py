"""Word-level rewriting of tie sequences.

A :class:`DiagramWord` is a run of moves that need not obey the tying rules,
optionally ending in the tuck ``T`` or in the lone tuck crossing ``t1``.
:func:`reduce_fully` applies the reductions in the fixed order 0, II, I, IV,
III until none applies, leaving one of the normal forms ``∅``, ``L...C*`` or
``L...Ct1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .grammar import (
    FLAT_FACADES,
    Direction,
    Region,
    SequenceSyntaxError,
    TieMove,
    TieSequence,
    format_sequence,
    parse_sequence,
    validate_fm,
)

__all__ = [
    "DiagramWord",
    "ReducedWord",
    "TraceStep",
    "ReductionTrace",
    "RewriteError",
    "crossing_replace",
    "reduce_fully",
    "replay",
    "mirror_sequence",
    "extend_sequence",
]

EMPTY_TEXT = "∅"


class RewriteError(ValueError):
    pass


def _other(region: Region) -> Region:
    if region is Region.L:
        return Region.R
    if region is Region.R:
        return Region.L
    raise RewriteError("C has no opposite side")


@dataclass(frozen=True)
class DiagramWord:
    """Moves plus an optional ending: the full tuck or the lone ``t1``."""

    moves: tuple[TieMove, ...] = ()
    t1: bool = False
    tucked: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "moves", tuple(self.moves))
        if self.t1 and self.tucked:
            raise RewriteError("a word ends in either t1 or the tuck, not both")

    def __len__(self) -> int:
        return len(self.moves) + (1 if self.t1 else 0)

    def __str__(self) -> str:
        if not self.moves and not self.t1 and not self.tucked:
            return EMPTY_TEXT
        tail = "t1" if self.t1 else ("T" if self.tucked else "")
        return "".join(str(m) for m in self.moves) + tail

    @property
    def regions(self) -> str:
        return "".join(m.region.value for m in self.moves) + ("*" if self.t1 else "")

    @classmethod
    def of(cls, seq: TieSequence) -> "DiagramWord":
        return cls(seq.moves, False, seq.tucked)

    @classmethod
    def parse(cls, text: str) -> "DiagramWord":
        """Text like ``"L_iC_ot_1"``, ``"LiCoRi"``, ``"LoRiCoT"`` or ``"∅"``."""
        raw = text.strip()
        if raw in ("", EMPTY_TEXT, "0", "empty"):
            return cls()
        squashed = raw.replace("_", "")
        t1 = squashed.lower().endswith("t1")
        if t1:
            squashed = squashed[:-2]
            if not squashed:
                raise SequenceSyntaxError("t1 needs preceding moves", 0)
        seq = parse_sequence(squashed)
        if t1 and seq.tucked:
            raise SequenceSyntaxError("t1 may only be the final symbol", len(raw) - 1)
        return cls(seq.moves, t1, seq.tucked)

    def to_sequence(self) -> TieSequence:
        if self.t1:
            raise RewriteError("a word ending in t1 is not a tie sequence")
        return TieSequence(self.moves, self.tucked)


def _is_normal(word: DiagramWord) -> bool:
    if word.tucked:
        return False
    if not word.moves:
        return not word.t1
    m = word.moves
    if m[0].region is not Region.L:
        return False
    if word.t1:
        return m[-1].region is Region.C
    return len(m) >= 3 and m[-2].region is Region.C and m[-1].region is not Region.C


@dataclass(frozen=True)
class ReducedWord(DiagramWord):
    """A diagram word in normal form: ``∅``, ``L...C*`` or ``L...Ct1``."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not _is_normal(self):
            raise RewriteError(f"{DiagramWord.__str__(self)} is not a reduced word")

    @property
    def is_empty(self) -> bool:
        return not self.moves

    @classmethod
    def parse(cls, text: str) -> "ReducedWord":
        w = DiagramWord.parse(text)
        return cls(w.moves, w.t1, w.tucked)


@dataclass(frozen=True)
class TraceStep:
    rule: str  # Replace, R0, RI, RII, RIII, RIV
    position: int  # 1-based index of the first symbol touched
    before: str
    after: str

    def to_json(self) -> str:
        return json.dumps(
            {"rule": self.rule, "position": self.position, "before": self.before, "after": self.after},
            ensure_ascii=False,
        )


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[TraceStep, ...] = field(default_factory=tuple)

    def __iter__(self) -> Iterator[TraceStep]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_jsonl(self) -> str:
        return "".join(s.to_json() + "\n" for s in self.steps)


# ---------------------------------------------------------------------------


def crossing_replace(word: DiagramWord, at: int) -> DiagramWord:
    """Replace ``C X`` at 1-based position ``at`` by ``C Y X``.

    ``X`` is L or R and ``Y`` is the other side; the inserted ``Y`` takes
    ``X``'s direction. The result is generally not a valid tie sequence.
    """
    k = at - 1
    m = word.moves
    if not (0 <= k < len(m) - 1) or m[k].region is not Region.C or m[k + 1].region is Region.C:
        raise RewriteError(f"no C followed by L or R at position {at} of {word}")
    x = m[k + 1]
    inserted = TieMove(_other(x.region), x.direction)
    return DiagramWord(m[: k + 1] + (inserted,) + m[k + 1 :], word.t1, word.tucked)


def _dirs(moves: Sequence[TieMove]) -> str:
    return "".join(str(mv) for mv in moves)


def _step(word: DiagramWord, steps: list[TraceStep]) -> Optional[DiagramWord]:
    m = word.moves
    n = len(m)
    if word.tucked:
        if tuple(m) == FLAT_FACADES[0]:
            out = DiagramWord()
            steps.append(TraceStep("R0", 1, str(word), str(out)))
            return out
        tail = _dirs(m[-4:])
        if n >= 5 and tail in ("CiRoLiCo", "CiLoRiCo"):
            replaced = crossing_replace(word, n - 3)
            steps.append(TraceStep("Replace", n - 3, str(word), str(replaced)))
            out = DiagramWord(m[:-4])
            steps.append(TraceStep("RII", n - 3, str(replaced), str(out)))
            return out
        if n >= 4 and tail in ("LiRoLiCo", "RiLoRiCo"):
            out = DiagramWord(m[:-3] + (m[-1],), t1=True)
            steps.append(TraceStep("RI", n - 2, str(word), str(out)))
            return out
        return None
    if word.t1:
        return None
    cs = [k for k, mv in enumerate(m) if mv.region is Region.C]
    if cs:
        last = cs[-1]
        if n - last - 1 >= 2:
            out = DiagramWord(m[: last + 2])
            steps.append(TraceStep("RIV", last + 3, str(word), str(out)))
            return out
        return None
    if m:
        out = DiagramWord()
        steps.append(TraceStep("RIII", 1, str(word), str(out)))
        return out
    return None


def _require_valid(seq: TieSequence) -> None:
    report = validate_fm(seq, max_moves=None)
    if not report.valid:
        v = report.violations[0]
        raise RewriteError(f"{format_sequence(seq)} breaks rule {v.rule} at move {v.position}: {v.message}")


def reduce_fully(seq: TieSequence) -> tuple[ReducedWord, ReductionTrace]:
    """Reduce a valid tie sequence to normal form, recording every step."""
    _require_valid(seq)
    word = DiagramWord.of(seq)
    steps: list[TraceStep] = []
    while True:
        nxt = _step(word, steps)
        if nxt is None:
            break
        word = nxt
    return ReducedWord(word.moves, word.t1, word.tucked), ReductionTrace(tuple(steps))


def replay(seq: TieSequence, trace: ReductionTrace) -> str:
    """Text of the word obtained by replaying ``trace`` on ``seq``."""
    cur = format_sequence(seq)
    for s in trace:
        if s.before != cur:
            raise RewriteError(f"trace step {s.rule} expects {s.before}, have {cur}")
        cur = s.after
    return cur


# ---------------------------------------------------------------------------
# constructions that produce new tie sequences

_FACADE_TAILS = (
    tuple(TieMove.of(t) for t in ("Ci", "Ro", "Li", "Co")),
    tuple(TieMove.of(t) for t in ("Ci", "Lo", "Ri", "Co")),
)


def _flip(moves: Sequence[TieMove]) -> tuple[TieMove, ...]:
    return tuple(mv.flipped() for mv in moves)


def _ends_rule_one(m: Sequence[TieMove]) -> bool:
    return len(m) >= 4 and _dirs(m[-4:]) in ("LiRoLiCo", "RiLoRiCo")


def _ends_rule_two(m: Sequence[TieMove]) -> bool:
    return len(m) >= 5 and _dirs(m[-4:]) in ("CiRoLiCo", "CiLoRiCo")


def _run(first: Region, direction: Direction, length: int) -> tuple[TieMove, ...]:
    out = []
    region, d = first, direction
    for _ in range(length):
        out.append(TieMove(region, d))
        region, d = _other(region), d.flipped()
    return tuple(out)


def mirror_sequence(seq: TieSequence, facade: int = 0) -> TieSequence:
    """A valid tie sequence whose knot is the mirror image of ``seq``'s.

    Reduction I or II is applied, every crossing is switched, and the word
    is re-extended by ``CiRoLiCoT`` (``facade=0``) or ``CiLoRiCoT``
    (``facade=1``). The three-move unknot is its own mirror and is
    returned unchanged.
    """
    _require_valid(seq)
    m = seq.moves
    tail = _FACADE_TAILS[facade]
    if tuple(m) == FLAT_FACADES[0] or tuple(m) == FLAT_FACADES[1]:
        return seq
    if _ends_rule_one(m):
        # [..] X_i C_o t1  ->  [..]' X_o C_i X_o
        before_c = m[-4]
        body = _flip(m[:-3] + (m[-1],)) + (TieMove(before_c.region, Direction.Out),)
    elif _ends_rule_two(m):
        # [..] ends in an out-move; flipped it ends in an in-move, so one
        # more move on the other side restores the parity of the first move
        prefix = _flip(m[:-4])
        last = prefix[-1]
        body = prefix + (TieMove(_other(last.region), Direction.Out),)
    else:
        raise RewriteError(f"{format_sequence(seq)} ends in no reducible pattern")
    out = TieSequence(body + tail, True)
    _require_valid(out)
    return out


def extend_sequence(seq: TieSequence, steps: int = 1) -> list[TieSequence]:
    """Longer tie sequences tying the same knot type.

    A sequence reducible by rule I gains ``2*steps + 1`` moves: its reduced
    word ``[..]XC t1`` has all crossings switched (the first move must flip
    to keep the parity rule, so for chiral knots the result is the mirror
    image), ``t1`` becomes an odd alternating L/R run and a flat-facade
    ending is added. A sequence reducible by rule II gains ``2*steps``
    moves by lengthening the alternating L/R run before its ending. Each
    run may start on either side and either facade may follow, so up to
    four sequences come back, sorted by text. When the run has to start
    with L (no C precedes it) only two distinct sequences exist.
    """
    if steps < 1:
        raise ValueError("steps must be a positive integer")
    _require_valid(seq)
    m = seq.moves
    found: set[TieSequence] = set()
    if _ends_rule_one(m):
        head = _flip(m[:-3] + (m[-1],))  # [..]' X_o C_i
        run_dir = head[-1].direction.flipped()
        for side in (Region.L, Region.R):
            run = _run(side, run_dir, 2 * steps - 1)
            for tail in _FACADE_TAILS:
                found.add(TieSequence(head + run + tail, True))
    else:
        if _ends_rule_two(m):
            prefix = m[:-4]
        elif tuple(m) in FLAT_FACADES:
            prefix = ()
        else:
            raise RewriteError(f"{format_sequence(seq)} ends in no reducible pattern")
        cs = [k for k, mv in enumerate(prefix) if mv.region is Region.C]
        if cs:
            head = prefix[: cs[-1] + 1]
            run_len = len(prefix) - len(head) + 2 * steps
            run_dir = head[-1].direction.flipped()
            sides = (Region.L, Region.R)
        else:
            head = ()
            run_len = len(prefix) + 2 * steps
            # the whole word's parity fixes the first direction
            total = run_len + 4
            run_dir = Direction.In if total % 2 == 0 else Direction.Out
            sides = (Region.L,)
        for side in sides:
            run = _run(side, run_dir, run_len)
            for tail in _FACADE_TAILS:
                found.add(TieSequence(head + run + tail, True))
    out = sorted(found, key=format_sequence)
    for s in out:
        _require_valid(s)
    return out
