"""SVG pictures of tie diagrams (presentational only)."""

from __future__ import annotations

from xml.sax.saxutils import escape

import networkx as nx

from .diagram import TieDiagram

__all__ = ["render_svg"]

_SIZE = 400
_PAD = 30
_GAP = 0.28  # fraction of an under-arc's first/last segment left blank


def _embedding(d: TieDiagram) -> tuple[nx.PlanarEmbedding, dict[int, list]]:
    """Crossings plus two bend nodes per arc, so loops and parallel arcs
    become a simple plane graph with the diagram's rotation system."""
    pd = d.pd.crossings
    ends: dict[int, list[tuple[int, int]]] = {}
    for c, x in enumerate(pd):
        for p, a in enumerate(x):
            ends.setdefault(a, []).append((c, p))
    # neighbour of crossing c in direction of position p
    toward: dict[tuple[int, int], tuple] = {}
    paths: dict[int, list] = {}
    emb_data: dict = {}
    for a, ((c1, p1), (c2, p2)) in ends.items():
        m1, m2 = ("bend", a, 0), ("bend", a, 1)
        toward[(c1, p1)] = m1
        toward[(c2, p2)] = m2
        emb_data[m1] = [("x", c1), m2]
        emb_data[m2] = [m1, ("x", c2)]
        paths[a] = [("x", c1), m1, m2, ("x", c2)]
    for c in range(len(pd)):
        # PD positions run counterclockwise; networkx wants clockwise
        emb_data[("x", c)] = [toward[(c, p)] for p in (3, 2, 1, 0)]
    emb = nx.PlanarEmbedding()
    emb.set_data(emb_data)
    emb.check_structure()
    return emb, paths


def render_svg(d: TieDiagram, title: str = "") -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">\n'
    )
    parts = [head]
    if title:
        parts.append(f"  <title>{escape(title)}</title>\n")
    if len(d) == 0:
        r = _SIZE / 2 - _PAD
        parts.append(
            f'  <circle cx="{_SIZE / 2}" cy="{_SIZE / 2}" r="{r}" fill="none" stroke="black" stroke-width="3"/>\n'
        )
        parts.append("</svg>\n")
        return "".join(parts)

    emb, paths = _embedding(d)
    pos = nx.combinatorial_embedding_to_pos(emb)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (_SIZE - 2 * _PAD) / span

    def at(node) -> tuple[float, float]:
        x, y = pos[node]
        # flip y so counterclockwise in the diagram stays counterclockwise on screen
        return _PAD + (x - min(xs)) * scale, _SIZE - _PAD - (y - min(ys)) * scale

    under = {}
    for c, x in enumerate(d.pd.crossings):
        under[(c, x[0])] = True
        under[(c, x[2])] = True
    for a, nodes in sorted(paths.items()):
        pts = [at(n) for n in nodes]
        c_start, c_end = nodes[0][1], nodes[-1][1]
        if under.get((c_start, a)):
            pts[0] = _toward(pts[0], pts[1], _GAP)
        if under.get((c_end, a)):
            pts[-1] = _toward(pts[-1], pts[-2], _GAP)
        coords = " ".join(f"{x:.1f},{y:.1f}" for x, y in pts)
        parts.append(
            f'  <polyline points="{coords}" fill="none" stroke="black" stroke-width="3" '
            f'stroke-linejoin="round" data-arc="{a}"/>\n'
        )
    for c, crossing in enumerate(d.crossings):
        x, y = at(("x", c))
        parts.append(
            f'  <text x="{x + 6:.1f}" y="{y - 6:.1f}" font-size="11" fill="#b22">{escape(crossing.label)}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def _toward(p: tuple[float, float], q: tuple[float, float], t: float) -> tuple[float, float]:
    return p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t
