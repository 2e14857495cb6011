from __future__ import annotations

import xml.etree.ElementTree as ET

from tieknots.diagram import build_diagram
from tieknots.grammar import enumerate_sequences
from tieknots.render import render_svg
from tieknots.rewrite import ReducedWord, reduce_fully

NS = "{http://www.w3.org/2000/svg}"


def test_every_diagram_renders():
    for seq in enumerate_sequences(3, 6):
        for word in (seq, reduce_fully(seq)[0]):
            d = build_diagram(word)
            root = ET.fromstring(render_svg(d, title=str(word)))
            arcs = root.findall(f"{NS}polyline")
            assert len(arcs) == 2 * len(d)


def test_empty_renders_a_circle():
    root = ET.fromstring(render_svg(build_diagram(ReducedWord(()))))
    assert root.find(f"{NS}circle") is not None
