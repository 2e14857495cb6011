"""Planar-diagram and Gauss codes for knot diagrams.

A crossing ``(i, j, k, l)`` lists its four arc labels counterclockwise,
starting from the incoming under-arc, so the under-strand runs ``i -> k``.
Arcs of an ``n``-crossing knot are numbered ``1..2n`` along the orientation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["PDCode", "GaussCode", "MalformedPDError"]


class MalformedPDError(ValueError):
    pass


Corner = tuple[int, int]  # (crossing index, position 0..3)


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "crossings", tuple(tuple(int(a) for a in x) for x in self.crossings)
        )
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedPDError(f"crossing {x} does not have four arcs")
        counts: dict[int, int] = {}
        for x in self.crossings:
            for a in x:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, c in counts.items() if c != 2)
        if bad:
            raise MalformedPDError(f"arc labels {bad} do not appear exactly twice")
        if counts and sorted(counts) != list(range(1, 2 * len(self.crossings) + 1)):
            raise MalformedPDError("arc labels must be 1..2n")

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def num_arcs(self) -> int:
        return 2 * len(self.crossings)

    # -- serialisation ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"pd": [list(x) for x in self.crossings]}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PDCode":
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["pd"]
        return cls(tuple(tuple(x) for x in data))

    @classmethod
    def from_list(cls, crossings: Iterable[Sequence[int]]) -> "PDCode":
        return cls(tuple(tuple(x) for x in crossings))

    # -- orientation -----------------------------------------------------

    def _succ(self, a: int) -> int:
        return a % self.num_arcs + 1

    def over_arcs(self, c: int) -> tuple[int, int]:
        """(incoming, outgoing) labels of the over-strand at crossing ``c``."""
        i, j, k, l = self.crossings[c]
        forward = j == self._succ(l)
        backward = l == self._succ(j)
        if forward and backward:
            # two arcs only: the over-strand enters on the arc the under-strand leaves by
            return k, i
        if forward:
            return l, j
        if backward:
            return j, l
        raise MalformedPDError(f"over-strand labels at crossing {c} are not consecutive")

    def signs(self) -> list[int]:
        """Crossing signs: +1 when the over-strand turned 90 degrees
        counterclockwise points along the under-strand."""
        out = []
        for c, (i, j, k, l) in enumerate(self.crossings):
            _, over_out = self.over_arcs(c)
            # under runs S->N (i..k); positive iff over runs W->E, leaving through j
            out.append(1 if over_out == j else -1)
        return out

    def writhe(self) -> int:
        return sum(self.signs())

    def mirror(self) -> "PDCode":
        """Every crossing switched; labels and orientation kept."""
        out = []
        for c, (i, j, k, l) in enumerate(self.crossings):
            over_in, _ = self.over_arcs(c)
            # new under-strand is the old over-strand; rotate so it comes first
            if over_in == j:
                out.append((j, k, l, i))
            else:
                out.append((l, i, j, k))
        return PDCode(tuple(out))

    # -- planar structure ------------------------------------------------

    def _ends(self) -> dict[Corner, Corner]:
        seen: dict[int, Corner] = {}
        other: dict[Corner, Corner] = {}
        for c, x in enumerate(self.crossings):
            for p, a in enumerate(x):
                if a in seen:
                    other[(c, p)] = seen[a]
                    other[seen[a]] = (c, p)
                else:
                    seen[a] = (c, p)
        return other

    def faces(self) -> list[list[Corner]]:
        """Faces as cycles of corners; corner ``(c, p)`` sits between
        positions ``p`` and ``p+1`` of crossing ``c``."""
        other = self._ends()
        seen: set[Corner] = set()
        faces = []
        for c in range(len(self.crossings)):
            for p in range(4):
                if (c, p) in seen:
                    continue
                face = []
                cur = (c, p)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cc, pp = cur
                    cur = other[(cc, (pp + 1) % 4)]
                faces.append(face)
        return faces

    def euler_ok(self) -> bool:
        """V - E + F == 2 for the underlying 4-regular map."""
        n = len(self.crossings)
        if n == 0:
            return True
        return n - 2 * n + len(self.faces()) == 2

    def checkerboard(self) -> tuple[list[list[Corner]], list[int]]:
        """Faces and a proper two-colouring of them."""
        faces = self.faces()
        where = {corner: f for f, face in enumerate(faces) for corner in face}
        colour = [-1] * len(faces)
        for start in range(len(faces)):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            stack = [start]
            while stack:
                f = stack.pop()
                for c, p in faces[f]:
                    for q in range(4):
                        g = where[(c, q)]
                        want = colour[f] ^ ((q - p) % 2)
                        if colour[g] < 0:
                            colour[g] = want
                            stack.append(g)
                        elif colour[g] != want:
                            raise MalformedPDError("diagram is not planar (no checkerboard colouring)")
        return faces, colour

    def gauss_code(self) -> "GaussCode":
        n = len(self.crossings)
        if n == 0:
            return GaussCode(())
        signs = self.signs()
        under_end: dict[int, int] = {}
        over_end: dict[int, int] = {}
        for c, (i, _, _, _) in enumerate(self.crossings):
            under_end[i] = c
            over_end[self.over_arcs(c)[0]] = c
        tokens = []
        for a in range(1, 2 * n + 1):
            if a in under_end:
                c = under_end[a]
                tokens.append((c + 1, "U", signs[c]))
            else:
                c = over_end[a]
                tokens.append((c + 1, "O", signs[c]))
        return GaussCode(tuple(tokens))


@dataclass(frozen=True)
class GaussCode:
    """Crossings met along the knot, starting at the end of arc 1.

    Tokens are ``(crossing id, "O" | "U", sign)``.
    """

    tokens: tuple[tuple[int, str, int], ...] = ()

    def __str__(self) -> str:
        return ",".join(f"{ou}{cid}{'+' if s > 0 else '-'}" for cid, ou, s in self.tokens)

    @classmethod
    def parse(cls, text: str) -> "GaussCode":
        text = text.strip()
        if not text:
            return cls(())
        out = []
        for tok in text.split(","):
            tok = tok.strip()
            out.append((int(tok[1:-1]), tok[0], 1 if tok[-1] == "+" else -1))
        return cls(tuple(out))

    def to_pd(self) -> PDCode:
        """Rebuild a PD code, given that each crossing's rotation is fixed
        by its sign and over/under data."""
        n = len(self.tokens) // 2
        if n == 0:
            return PDCode(())
        arcs = 2 * n
        under: dict[int, tuple[int, int]] = {}
        over: dict[int, tuple[int, int]] = {}
        sign: dict[int, int] = {}
        for pos, (cid, ou, s) in enumerate(self.tokens):
            incoming = pos + 1
            outgoing = (pos + 1) % arcs + 1
            (under if ou == "U" else over)[cid] = (incoming, outgoing)
            sign[cid] = s
        out = []
        for cid in sorted(sign):
            (ui, uo), (oi, oo) = under[cid], over[cid]
            out.append((ui, oo, uo, oi) if sign[cid] > 0 else (ui, oi, uo, oo))
        return PDCode(tuple(out))
