from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

from tieknots.cli import execute_command
from tieknots.tables import published_appendix


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = execute_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_four_in_hand():
    code, out, _ = run("classify", "LiRoLiCoT")
    assert code == 0
    data = json.loads(out)
    assert data["knot"] == "3_1"
    assert data["family"] == "trefoil/right"
    assert set(data) >= {"sequence", "knot", "chirality", "family", "determinant", "jones"}


def test_enumerate():
    code, out, _ = run("enumerate", "--min", "3", "--max", "9")
    assert code == 0
    assert len(out.splitlines()) == 85
    code, out, _ = run("enumerate", "--min", "3", "--max", "4", "--format", "json")
    assert json.loads(out) == ["LiRoLiCoT", "LoRiCoT"]


def test_validate():
    code, out, _ = run("validate", "LiRoLiCoT")
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run("validate", "LiLoRiCoT")
    assert code == 1
    assert json.loads(out)["violations"][0]["rule"] == 1


def test_reduce_with_trace():
    code, out, _ = run("reduce", "LiRoCiRoLiCoT", "--trace")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "∅"
    assert [json.loads(x)["rule"] for x in lines[1:]] == ["Replace", "RII", "RIII"]


def test_diagram_formats():
    code, out, _ = run("diagram", "L_iC_ot_1")
    assert code == 0
    assert json.loads(out) == {"pd": [[4, 2, 5, 1], [2, 6, 3, 5], [6, 4, 1, 3]]}
    code, out, _ = run("diagram", "LiRoLiCoT", "--format", "gauss")
    assert out.strip().count(",") == 13
    code, out, _ = run("diagram", "LiRoLiCoT", "--reduced")
    assert len(json.loads(out)["pd"]) == 3


def test_table_appendix_knot_column():
    code, out, _ = run("table", "--appendix")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["fm_number", "moves", "sequence", "knot_type", "twist_type"]
    published = {r.fm_number: r for r in published_appendix()}
    assert len(rows) == 85
    for r in rows:
        assert r["knot_type"] == published[int(r["fm_number"])].knot_type


def test_table_summary():
    code, out, _ = run("table", "--summary", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["table1"]["3"] == ["0_1"]
    code, out, _ = run("table", "--summary")
    assert out.startswith("# table 1")


def test_render():
    code, out, _ = run("render", "LiRoLiCoT", "--reduced")
    assert code == 0
    assert out.startswith("<svg") and out.rstrip().endswith("</svg>")


def test_errors():
    code, _, err = run("classify", "Li Xo")
    assert code == 1 and "offset 3" in err
    code, _, err = run("frobnicate")
    assert code == 2
    code, _, err = run("enumerate", "--min", "x")
    assert code == 2
    code, _, err = run("--table-path", "/nonexistent/table.jsonl", "classify", "LiRoLiCoT")
    assert code == 1
    code, _, _ = run("classify", "LiLoRiCoT")
    assert code == 1


def test_deterministic_output():
    assert run("table", "--appendix") == run("table", "--appendix")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tieknots.cli", "classify", "LoRiCoT"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["family"] == "unknot"
