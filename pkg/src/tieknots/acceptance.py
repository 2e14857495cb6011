"""The acceptance checks, shared by ``tieknots verify`` and the test suite.

Each check returns a :class:`CheckResult`; none of them raises on a
failed expectation.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional

from .classify import (
    Chirality,
    KnotName,
    ReferenceTable,
    classify_full,
    classify_sequence,
    load_default_table,
)
from .diagram import build_diagram, is_alternating, is_nugatory_free, is_prime_diagram
from .grammar import enumerate_sequences, format_sequence, parse_sequence, validate_fm
from .invariants import bracket_span, jones_polynomial, kauffman_bracket
from .laurent import LaurentPolynomial
from .pdcode import PDCode
from .rewrite import extend_sequence, mirror_sequence, reduce_fully
from .tables import compute_appendix, published_appendix, published_summary, summarize

__all__ = ["CheckResult", "CHECKS", "run_all", "TIME_LIMITS"]

# seconds
TIME_LIMITS = {1: 1.0, 2: 10.0, 3: 10.0, 8: 30.0}
MOVE_COUNTS = {3: 1, 4: 1, 5: 3, 6: 5, 7: 11, 8: 21, 9: 43}


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.number} ({self.name}): {self.detail} [{self.seconds:.2f} s]"


class _Ctx:
    def __init__(self, table: Optional[ReferenceTable] = None) -> None:
        self.table = table or load_default_table()
        self.published = published_appendix()

    def sequences(self):
        return [(r, parse_sequence(r.sequence)) for r in self.published]


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    limit = TIME_LIMITS.get(number)
    if limit is not None and dt >= limit:
        ok = False
        detail += f"; took {dt:.2f} s, limit {limit:.0f} s"
    return CheckResult(number, name, ok, detail, dt)


def check_enumeration(ctx: _Ctx) -> tuple[bool, str]:
    seqs = enumerate_sequences(3, 9)
    texts = {format_sequence(s) for s in seqs}
    counts = Counter(len(s) for s in seqs)
    ok = len(seqs) == 85 and texts == {r.sequence for r in ctx.published} and dict(counts) == MOVE_COUNTS
    shown = ",".join(str(counts[k]) for k in sorted(counts))
    return ok, f"{len(seqs)} sequences, per-length counts {shown}"


def check_classification(ctx: _Ctx) -> tuple[bool, str]:
    rows = compute_appendix(ctx.table)
    pub = {r.fm_number: r for r in ctx.published}
    knot_bad = [r.fm_number for r in rows if pub[r.fm_number].knot_type != r.knot_type]
    twist_bad = [r.fm_number for r in rows if pub[r.fm_number].twist_type != r.twist_type]
    summary_ok = summarize(rows) == published_summary()
    ok = not knot_bad and not twist_bad and summary_ok
    detail = (
        f"knot type mismatches {knot_bad or 'none'}, twist type mismatches {twist_bad or 'none'}, "
        f"summary tables {'match' if summary_ok else 'differ'}"
    )
    return ok, detail


def check_reduction_soundness(ctx: _Ctx) -> tuple[bool, str]:
    bad = []
    for r, seq in ctx.sequences():
        word, _ = reduce_fully(seq)
        if jones_polynomial(build_diagram(seq).pd) != jones_polynomial(build_diagram(word).pd):
            bad.append(r.fm_number)
    return not bad, f"Jones(full) != Jones(reduced) for {bad or 'no rows'}"


def check_normal_forms(ctx: _Ctx) -> tuple[bool, str]:
    bad_shape, bad_unknot = [], []
    for r, seq in ctx.sequences():
        word, _ = reduce_fully(seq)
        regions = word.regions
        shaped = word.is_empty or (regions[0] == "L" and regions[-2] == "C" and regions[-1] in "LR*")
        if not shaped:
            bad_shape.append(r.fm_number)
        if r.knot_type == "0_1" and not word.is_empty:
            bad_unknot.append(r.fm_number)
    return not bad_shape and not bad_unknot, (
        f"off-shape reduced words {bad_shape or 'none'}, unknots not reducing to ∅ {bad_unknot or 'none'}"
    )


def check_diagram_theorems(ctx: _Ctx) -> tuple[bool, str]:
    fails: dict[str, list[int]] = {k: [] for k in ("alternating", "nugatory", "prime", "bound", "minimal", "span")}
    for r, seq in ctx.sequences():
        word, _ = reduce_fully(seq)
        d = build_diagram(word)
        n = len(d)
        if not is_alternating(d):
            fails["alternating"].append(r.fm_number)
        if not is_nugatory_free(d):
            fails["nugatory"].append(r.fm_number)
        if not is_prime_diagram(d):
            fails["prime"].append(r.fm_number)
        if n > len(seq) - 1:
            fails["bound"].append(r.fm_number)
        if n != KnotName.parse(r.knot_type).crossing_number:
            fails["minimal"].append(r.fm_number)
        if n and bracket_span(kauffman_bracket(d.pd)) != 4 * n:
            fails["span"].append(r.fm_number)
    bad = {k: v for k, v in fails.items() if v}
    return not bad, f"failures {bad}" if bad else "all 85 reduced diagrams pass all six checks"


def check_family_formulas(ctx: _Ctx) -> tuple[bool, str]:
    torus = twist = 0
    bad = []
    for r, seq in ctx.sequences():
        c = classify_full(seq, ctx.table)
        f = c.family
        if f.is_torus:
            torus += 1
            if c.determinant != f.torus_p:
                bad.append((r.fm_number, "torus det"))
        if f.is_twist:
            twist += 1
            if c.determinant != 2 * f.twists + 1:
                bad.append((r.fm_number, "twist det"))
            if f.twist_form == 2 and f.twists % 2:
                bad.append((r.fm_number, "form 2 odd"))
            if f.twist_form == 3 and not f.twists % 2:
                bad.append((r.fm_number, "form 3 even"))
    return not bad, f"{torus} torus and {twist} twist rows checked, failures {bad or 'none'}"


def check_mirror(ctx: _Ctx) -> tuple[bool, str]:
    bad = []
    for r, seq in ctx.sequences():
        m = mirror_sequence(seq)
        valid = validate_fm(m, max_moves=None).valid
        jm = jones_polynomial(build_diagram(m).pd)
        jo = jones_polynomial(build_diagram(seq).pd)
        if not valid or jm != jo.inverted():
            bad.append(r.fm_number)
    fm2 = parse_sequence("LiRoLiCoT")
    k0 = classify_sequence(fm2, ctx.table)
    k1 = classify_sequence(mirror_sequence(fm2), ctx.table)
    flipped = (
        k1.base == "3_1"
        and {k0.chirality, k1.chirality} == {Chirality.SameAsReference, Chirality.MirrorOfReference}
    )
    return not bad and flipped, (
        f"mirror law failures {bad or 'none'}; FM 2 mirror is {k1.base}/{k1.chirality.value} "
        f"against {k0.base}/{k0.chirality.value}"
    )


def check_extension(ctx: _Ctx) -> tuple[bool, str]:
    wrong_count, wrong_type = [], []
    for r, seq in ctx.sequences():
        out = extend_sequence(seq, 1)
        if len(out) != 4 or not all(validate_fm(s, max_moves=None).valid for s in out):
            wrong_count.append(r.fm_number)
        if any(classify_sequence(s, ctx.table).base != r.knot_type for s in out):
            wrong_type.append(r.fm_number)
    fm19 = {format_sequence(s) for s in extend_sequence(parse_sequence("LiRoLiCoT"), 1)}
    has19 = "LoCiRoCiRoLiCoT" in fm19
    ok = not wrong_count and not wrong_type and has19
    return ok, (
        f"rows without exactly 4 valid outputs {wrong_count or 'none'}, "
        f"rows changing type {wrong_type or 'none'}, FM 19 among FM 2 extensions: {has19}"
    )


def check_engine(ctx: _Ctx) -> tuple[bool, str]:
    a = LaurentPolynomial.monomial(1, var="A")
    empty_ok = kauffman_bracket(PDCode(())) == 1
    kinks_ok = (
        kauffman_bracket(PDCode.from_list([[1, 1, 2, 2]])) == -(a**3)
        and kauffman_bracket(PDCode.from_list([[2, 1, 1, 2]])) == -(a**-3)
    )
    mirror_ok = all(
        jones_polynomial(e.pd.mirror()) == e.fingerprint.jones.inverted() for e in ctx.table.entries
    )
    keys = {e.fingerprint.key() for e in ctx.table.entries}
    distinct = len(ctx.table) == 27 and len(keys) == 27
    ok = empty_ok and kinks_ok and mirror_ok and distinct
    return ok, (
        f"bracket(∅)=1 {empty_ok}, kinks -A^±3 {kinks_ok}, mirror law {mirror_ok}, "
        f"{len(keys)} distinct fingerprints over {len(ctx.table)} types"
    )


CHECKS: list[tuple[int, str, Callable[[_Ctx], tuple[bool, str]]]] = [
    (1, "enumeration", check_enumeration),
    (2, "classification table", check_classification),
    (3, "reduction soundness", check_reduction_soundness),
    (4, "reduced-form normality", check_normal_forms),
    (5, "diagram theorems", check_diagram_theorems),
    (6, "family formulas", check_family_formulas),
    (7, "mirror construction", check_mirror),
    (8, "extension construction", check_extension),
    (9, "invariant-engine oracles", check_engine),
]


def run_check(number: int, table: Optional[ReferenceTable] = None, ctx: Optional[_Ctx] = None) -> CheckResult:
    ctx = ctx or _Ctx(table)
    for n, name, fn in CHECKS:
        if n == number:
            return _timed(n, name, lambda: fn(ctx))
    raise KeyError(number)


def run_all(table: Optional[ReferenceTable] = None) -> list[CheckResult]:
    ctx = _Ctx(table)
    return [_timed(n, name, lambda fn=fn: fn(ctx)) for n, name, fn in CHECKS]
