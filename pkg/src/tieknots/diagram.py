"""Planar tie diagrams.

The passive strand runs from ``b`` up the straight strand to the first
crossing, then once around the neck loop to ``a``. The active strand starts
at ``a``, passes through the first crossing (closing the neck loop) and then
makes one crossing per move:

* L <-> R crosses the straight strand, each new crossing below the others;
* L <-> C crosses the left side of the neck loop, moving away from ``a``;
* R <-> C crosses the right side, also moving away from ``a``.

The diagram is grown as a rotation system. Every crossing is placed by
routing the free end of the active strand through the face it currently
lies in; if the target edge is not on that face the word cannot be drawn
without extra crossings and :class:`DiagramError` is raised. Planarity is
therefore guaranteed by construction, and checked again via Euler's formula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .grammar import Region, TieMove, TieSequence, validate_fm
from .pdcode import GaussCode, PDCode

__all__ = [
    "PassiveSegment",
    "CrossingKind",
    "Crossing",
    "TieDiagram",
    "DiagramError",
    "build_diagram",
    "to_pd_code",
    "to_gauss_code",
    "writhe",
    "is_alternating",
    "is_nugatory_free",
    "is_prime_diagram",
    "pd_is_nugatory_free",
    "pd_is_prime",
    "pd_is_alternating",
]


class DiagramError(ValueError):
    pass


class PassiveSegment(enum.Enum):
    StraightStrand = "straight"
    LeftArc = "left"
    RightArc = "right"


class CrossingKind(enum.Enum):
    Move = "move"
    TuckT1 = "t1"
    TuckT2 = "t2"
    TuckT3 = "t3"


@dataclass(frozen=True)
class Crossing:
    id: int  # 1-based order along the active strand
    kind: CrossingKind
    active_over: bool
    segment: Optional[PassiveSegment] = None
    slot: Optional[int] = None  # 1-based distance from the segment's start
    label: str = ""


@dataclass(frozen=True)
class TieDiagram:
    """An immutable tie diagram.

    ``rotation[c]`` lists the four strand ends at crossing ``c`` (index into
    ``crossings``) counterclockwise, each as ``(strand, "in" | "out")`` where
    ``strand`` is ``"active"`` or ``"passive"`` for move crossings and
    ``"tuck"``/``"active"`` for the tuck's self-crossings.
    """

    crossings: tuple[Crossing, ...]
    rotation: tuple[tuple[tuple[str, str], ...], ...]
    pd: PDCode
    signs: tuple[int, ...]
    faces: int
    graph_rotation: dict = field(repr=False, compare=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.crossings)

    def euler_ok(self) -> bool:
        return self.pd.euler_ok()

    def mirror(self) -> "TieDiagram":
        crossings = tuple(
            Crossing(c.id, c.kind, not c.active_over, c.segment, c.slot, c.label)
            for c in self.crossings
        )
        return TieDiagram(
            crossings,
            self.rotation,
            self.pd.mirror(),
            tuple(-s for s in self.signs),
            self.faces,
            self.graph_rotation,
        )


# ---------------------------------------------------------------------------
# rotation-system builder


class _Map:
    """Half-edge structure. Dart ``2e`` runs along the strand direction of
    edge ``e``, dart ``2e+1`` against it; ``rot[v]`` is counterclockwise."""

    def __init__(self) -> None:
        self.ends: list[list[int]] = []
        self.kind: list[str] = []  # "stem", "loop", "active"
        self.rot: dict[int, list[int]] = {}
        self.vkind: dict[int, str] = {}
        self._next_v = 0

    def vertex(self, kind: str) -> int:
        v = self._next_v
        self._next_v += 1
        self.rot[v] = []
        self.vkind[v] = kind
        return v

    def edge(self, u: int, v: int, kind: str) -> int:
        self.ends.append([u, v])
        self.kind.append(kind)
        return len(self.ends) - 1

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def origin(self, d: int) -> int:
        return self.ends[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.ends[d >> 1][1 - (d & 1)]

    def face_next(self, d: int) -> int:
        v = self.head(d)
        r = self.rot[v]
        return r[(r.index(d ^ 1) - 1) % len(r)]

    def faces(self) -> dict[int, int]:
        face_of: dict[int, int] = {}
        n = 0
        for d in range(2 * len(self.ends)):
            if d in face_of:
                continue
            cur = d
            while cur not in face_of:
                face_of[cur] = n
                cur = self.face_next(cur)
            n += 1
        return face_of

    def split(self, e: int, x: int) -> int:
        """Insert vertex ``x`` on edge ``e``; returns the new far edge."""
        p, q = self.ends[e]
        self.ends[e] = [p, x]
        e2 = self.edge(x, q, self.kind[e])
        r = self.rot[q]
        r[r.index(2 * e + 1)] = 2 * e2 + 1
        return e2


@dataclass
class _XRec:
    vertex: int
    kind: CrossingKind
    over_active: bool
    segment: Optional[PassiveSegment]
    slot: Optional[int]
    label: str


_ARM = {Region.L: PassiveSegment.LeftArc, Region.R: PassiveSegment.RightArc}


class _Builder:
    def __init__(self) -> None:
        m = self.m = _Map()
        self.b = m.vertex("b")
        self.a = m.vertex("a")
        self.records: list[_XRec] = []
        self.active_edges: list[int] = []  # edge ids along the active strand
        self.move_edges: list[int] = []  # active edge that *ends* at move crossing k
        self.slots = {s: 0 for s in PassiveSegment}
        self.region: Optional[Region] = None
        self.pen: Optional[int] = None
        self.pen_edge: Optional[int] = None

    # -- primitive: cross edge ``e`` coming from the face of dart ``d`` ----

    def _cross(self, e: int, from_forward_side: bool, rec: _XRec) -> int:
        m = self.m
        d = 2 * e if from_forward_side else 2 * e + 1
        faces = m.faces()
        pen_dart = 2 * self.pen_edge  # prev -> pen
        if faces[d] != faces[pen_dart]:
            raise DiagramError(f"{rec.label}: target edge is not reachable without extra crossings")
        x = rec.vertex
        e2 = m.split(e, x)
        # darts at x after the split: toward the old tail / old head of e
        to_tail, to_head = 2 * e + 1, 2 * e2
        if from_forward_side:
            x_to_v, x_to_u = to_head, to_tail
        else:
            x_to_v, x_to_u = to_tail, to_head
        m.ends[self.pen_edge][1] = x
        del m.rot[self.pen]
        new_pen = m.vertex("pen")
        out = m.edge(x, new_pen, "active")
        m.rot[new_pen] = [2 * out + 1]
        m.rot[x] = [x_to_v, 2 * self.pen_edge + 1, x_to_u, 2 * out]
        self.records.append(rec)
        self.pen, self.pen_edge = new_pen, out
        self.active_edges.append(out)
        return e2

    def start(self, first: TieMove) -> None:
        if first.region is not Region.L:
            raise DiagramError("diagram words must start with an L move")
        m = self.m
        j = m.vertex("x")
        self.pen = m.vertex("pen")
        stem = m.edge(self.b, j, "stem")
        loop = m.edge(j, self.a, "loop")
        act0 = m.edge(self.a, j, "active")
        act1 = m.edge(j, self.pen, "active")
        m.rot[self.b] = [2 * stem]
        m.rot[self.a] = [2 * loop + 1, 2 * act0]
        m.rot[self.pen] = [2 * act1 + 1]
        m.rot[j] = [2 * act0 + 1, 2 * loop, 2 * act1, 2 * stem + 1]
        self.stem_bottom = stem
        self.loop_top = loop
        self.pen_edge = act1
        self.active_edges = [act0, act1]
        self.slots[PassiveSegment.StraightStrand] = 1
        self.records.append(
            _XRec(j, CrossingKind.Move, first.is_in, PassiveSegment.StraightStrand, 1, str(first))
        )
        self.move_edges.append(act0)
        self.region = Region.L

    def move(self, mv: TieMove) -> None:
        src, dst = self.region, mv.region
        if src is dst:
            raise DiagramError(f"move {mv} does not change region")
        x = self.m.vertex("x")
        incoming = self.pen_edge
        if Region.C not in (src, dst):
            seg = PassiveSegment.StraightStrand
            self.slots[seg] += 1
            rec = _XRec(x, CrossingKind.Move, mv.is_in, seg, self.slots[seg], str(mv))
            # forward stem dart points up; its left side is L
            self._cross(self.stem_bottom, src is Region.L, rec)
            # the lower part of the split edge keeps the id stem_bottom
        else:
            side = src if dst is Region.C else dst
            seg = _ARM[side]
            self.slots[seg] += 1
            rec = _XRec(x, CrossingKind.Move, mv.is_in, seg, self.slots[seg], str(mv))
            # forward loop darts have the exterior on their left
            top = self.loop_top
            far = self._cross(top, dst is Region.C, rec)
            # the top edge always sits between the newest left and right crossings
            if side is Region.L:
                self.loop_top = far
        self.move_edges.append(incoming)
        self.region = dst

    def t1(self, last_c_from: Region) -> None:
        """Lone in-crossing from C over the top of the neck loop, into the
        side opposite the arm crossed by the final C move."""
        if self.region is not Region.C:
            raise DiagramError("t1 must follow a C move")
        side = Region.R if last_c_from is Region.L else Region.L
        seg = _ARM[side]
        x = self.m.vertex("x")
        self.slots[seg] += 1
        rec = _XRec(x, CrossingKind.TuckT1, True, seg, self.slots[seg], "t1")
        far = self._cross(self.loop_top, False, rec)
        if side is Region.L:
            self.loop_top = far
        self.region = side

    def tuck_self(self, target: int, over: bool, kind: CrossingKind) -> int:
        """Cross active edge ``target`` from whichever side the pen is on."""
        m = self.m
        faces = m.faces()
        pen_face = faces[2 * self.pen_edge]
        sides = [s for s in (True, False) if faces[2 * target + (0 if s else 1)] == pen_face]
        if not sides:
            raise DiagramError(f"{kind.value}: active segment not reachable")
        x = m.vertex("x")
        rec = _XRec(x, kind, over, None, None, kind.value)
        return self._cross(target, sides[0], rec)

    def close(self) -> None:
        m = self.m
        faces = m.faces()
        if faces[2 * self.stem_bottom] != faces[2 * self.pen_edge]:
            raise DiagramError("active end cannot reach b without extra crossings")
        m.ends[self.pen_edge][1] = self.b
        del m.rot[self.pen]
        m.rot[self.b].append(2 * self.pen_edge + 1)
        self.pen = None


def _word_parts(word) -> tuple[tuple[TieMove, ...], bool, bool]:
    moves = tuple(word.moves)
    return moves, bool(getattr(word, "t1", False)), bool(getattr(word, "tucked", False))


def build_diagram(word, *, check: bool = True) -> TieDiagram:
    """Compile a tie sequence, diagram word or reduced word into a diagram.

    Full sequences are checked against rules 0-3 when ``check`` is true.
    A tucked word contributes the tuck crossings t1, t2, t3; a word with a
    trailing ``t1`` contributes only the lone over-crossing on the neck loop.

    The tuck's t1 crosses the top of the neck loop. Both t2 (over) and t3
    (under) cross the active segment running from the antepenultimate to
    the penultimate move crossing, in that order along it; this is the
    only placement reachable without extra crossings, and it lets two
    Reidemeister II moves cancel t2 and t3 against the last two straight
    strand crossings.
    """
    moves, has_t1, tucked = _word_parts(word)
    if isinstance(word, TieSequence) and check:
        report = validate_fm(word, max_moves=None)
        bad = [v for v in report.violations if v.rule in (0, 1, 2, 3)]
        if bad:
            raise DiagramError(f"invalid tie sequence {word}: {bad[0].message}")
    if has_t1 and tucked:
        raise DiagramError("a word cannot carry both a tuck and a lone t1")

    bld = _Builder()
    if not moves:
        if has_t1 or tucked:
            raise DiagramError("t1/tuck without moves")
        return _empty()
    bld.start(moves[0])
    for mv in moves[1:]:
        bld.move(mv)

    if has_t1 or tucked:
        if moves[-1].region is not Region.C or len(moves) < 2:
            raise DiagramError("t1 and the tuck must follow a final C move")
        bld.t1(moves[-2].region)
    if tucked:
        if len(moves) < 3:
            raise DiagramError("tuck needs at least three moves")
        k = len(moves)
        # active edge from the antepenultimate to the penultimate move crossing
        far = bld.tuck_self(bld.move_edges[k - 2], True, CrossingKind.TuckT2)
        bld.tuck_self(far, False, CrossingKind.TuckT3)
    bld.close()
    return _finish(bld)


def _empty() -> TieDiagram:
    return TieDiagram((), (), PDCode(()), (), 1)


def _finish(bld: _Builder) -> TieDiagram:
    m = bld.m
    xs = {r.vertex: r for r in bld.records}
    # The builder works in the plane seen from behind the tie. Reflect so
    # the diagram is the front view, where a first move Li gives the right
    # handed trefoil.
    for r in m.rot.values():
        r.reverse()
    # walk the knot from a along the active strand
    start = None
    for d in m.rot[bld.a]:
        if m.kind[d >> 1] == "active":
            start = d
    assert start is not None
    label = 1
    dart_label: dict[int, int] = {}  # dart out of / into a crossing -> arc label
    order: list[int] = []  # crossing vertices in the order the active strand meets them
    passes: dict[int, list[tuple[int, int, bool]]] = {v: [] for v in xs}
    d = start
    total = 0
    while True:
        v = m.head(d)
        if v in xs:
            back = d ^ 1
            r = m.rot[v]
            out = r[(r.index(back) + 2) % 4]
            dart_label[back] = label
            label = label + 1
            total += 1
            dart_label[out] = label
            passes[v].append((back, out, m.kind[d >> 1] == "active"))
            if v not in order:
                order.append(v)
            d = out
        else:
            r = m.rot[v]
            if len(r) != 2:
                raise DiagramError("diagram does not close up")
            d = r[1] if r[0] == d ^ 1 else r[0]
        if v == bld.a:
            break
        if total > 4 * len(xs) + 4:
            raise DiagramError("traversal did not return to a")
    n = len(xs)
    wrap = 2 * n
    fix = {k: ((lab - 1) % wrap) + 1 for k, lab in dart_label.items()}

    # active strand meets crossings in creation order; passive passes follow
    ordered = [r.vertex for r in bld.records]
    crossings = []
    pd = []
    signs = []
    rotation = []
    for idx, v in enumerate(ordered, start=1):
        rec = xs[v]
        (b1, o1, act1), (b2, o2, _) = passes[v]
        # the first pass is always the active strand's (or the tuck's) own crossing pass
        first_is_over = rec.over_active
        if rec.kind is CrossingKind.TuckT2 or rec.kind is CrossingKind.TuckT3:
            # first pass = the earlier active segment, second = the tuck
            first_is_over = not rec.over_active
        over_back, over_out = (b1, o1) if first_is_over else (b2, o2)
        under_back, under_out = (b2, o2) if first_is_over else (b1, o1)
        r = m.rot[v]
        start_i = r.index(under_back)
        pd.append(tuple(fix[r[(start_i + t) % 4]] for t in range(4)))
        signs.append(1 if r[(r.index(over_out) + 1) % 4] == under_out else -1)
        self_crossing = rec.kind in (CrossingKind.TuckT2, CrossingKind.TuckT3)
        second = "tuck" if self_crossing else "passive"
        names = {b1: ("active", "in"), o1: ("active", "out"), b2: (second, "in"), o2: (second, "out")}
        rotation.append(tuple(names[x] for x in r))
        crossings.append(Crossing(idx, rec.kind, rec.over_active, rec.segment, rec.slot, rec.label))
    code = PDCode(tuple(pd))
    faces = len(set(m.faces().values()))
    return TieDiagram(
        tuple(crossings),
        tuple(rotation),
        code,
        tuple(signs),
        faces,
        {v: list(r) for v, r in m.rot.items()},
    )


# ---------------------------------------------------------------------------
# exports and predicates


def to_pd_code(d: TieDiagram) -> PDCode:
    if not d.pd.euler_ok():
        raise DiagramError("rotation system is not planar")
    return d.pd


def to_gauss_code(d: TieDiagram) -> GaussCode:
    return to_pd_code(d).gauss_code()


def writhe(d: TieDiagram) -> int:
    return sum(d.signs)


def pd_is_alternating(pd: PDCode) -> bool:
    gauss = pd.gauss_code().tokens
    return all(gauss[k][1] != gauss[k - 1][1] for k in range(len(gauss)))


def is_alternating(d: TieDiagram) -> bool:
    """Over and under strictly alternate along the whole knot."""
    return pd_is_alternating(d.pd)


def _arc_graph(pd: PDCode) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(len(pd)))
    ends: dict[int, list[int]] = {}
    for c, x in enumerate(pd.crossings):
        for a in x:
            ends.setdefault(a, []).append(c)
    for a, (u, v) in ends.items():
        g.add_edge(u, v, key=a)
    return g


def pd_is_nugatory_free(pd: PDCode) -> bool:
    if len(pd) == 0:
        return True
    g = _arc_graph(pd)
    # subdivide so loops and parallel arcs become ordinary edges
    simple = nx.Graph()
    for u, v, a in g.edges(keys=True):
        mid = ("arc", a)
        simple.add_edge(u, mid)
        simple.add_edge(mid, v)
    if len(pd) == 1:
        return False
    return not any(isinstance(v, int) for v in nx.articulation_points(simple))


def is_nugatory_free(d: TieDiagram) -> bool:
    """No crossing is a cut vertex of the diagram's 4-regular graph."""
    return pd_is_nugatory_free(d.pd)


def pd_is_prime(pd: PDCode) -> bool:
    n = len(pd)
    if n <= 1:
        return True
    g = _arc_graph(pd)
    arcs = list(g.edges(keys=True))
    for x in range(len(arcs)):
        for y in range(x + 1, len(arcs)):
            h = g.copy()
            h.remove_edges_from([arcs[x], arcs[y]])
            if not nx.is_connected(h):
                return False
    return True


def is_prime_diagram(d: TieDiagram) -> bool:
    """No pair of arcs whose removal splits the crossings in two."""
    return pd_is_prime(d.pd)
