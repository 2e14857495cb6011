from __future__ import annotations

import json
from collections import defaultdict

import pytest

from oracles import knotinfo
from tieknots.classify import (
    Chirality,
    ClassificationError,
    FamilyKind,
    KnotName,
    ReferenceTableError,
    classify_full,
    classify_pd,
    classify_sequence,
    is_two_bridge_listed,
    load_default_table,
    load_reference_table,
    recognize_family,
)
from tieknots.grammar import parse_sequence
from tieknots.pdcode import PDCode

TWIST_TYPES = {"3_1", "4_1", "5_2", "6_1", "7_2", "8_1"}
TORUS_TYPES = {"3_1", "5_1", "7_1"}


def _line(name, pd):
    return json.dumps({"name": name, "pd": pd})


def test_default_table(table):
    assert len(table) == 27
    assert len({e.fingerprint.key() for e in table.entries}) == 27


def test_table_entries_agree_with_knotinfo(table):
    ref = knotinfo()
    for e in table.entries:
        assert e.fingerprint.determinant == ref[e.name]["determinant"]


def test_duplicate_name_rejected():
    pd = knotinfo()["3_1"]["pd"]
    with pytest.raises(ReferenceTableError, match="duplicate"):
        load_reference_table("\n".join([_line("3_1", pd), _line("3_1", pd)]))


def test_collision_rejected():
    ref = knotinfo()
    text = "\n".join([_line("3_1", ref["3_1"]["pd"]), _line("5_1", ref["3_1"]["pd"])])
    with pytest.raises(ReferenceTableError, match="fingerprint"):
        load_reference_table(text.encode())


def test_malformed_pd_rejected():
    with pytest.raises(ReferenceTableError):
        load_reference_table(_line("3_1", [[1, 2, 3, 4]]))


def test_kink_unknot_accepted():
    kink = load_reference_table(_line("0_1", [[1, 1, 2, 2]]))
    plain = load_reference_table(_line("0_1", []))
    assert kink.entries[0].fingerprint.key() == plain.entries[0].fingerprint.key()


def test_table_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "t.jsonl"
    path.write_text(_line("0_1", []) + "\n" + _line("3_1", knotinfo()["3_1"]["pd"]) + "\n")
    monkeypatch.setenv("TIEKNOT_TABLE", str(path))
    assert load_default_table().names() == ["0_1", "3_1"]
    monkeypatch.setenv("TIEKNOT_TABLE", str(tmp_path / "missing.jsonl"))
    with pytest.raises(ReferenceTableError):
        load_default_table()


def test_out_of_range_knot(table):
    with pytest.raises(ClassificationError):
        classify_pd(PDCode.from_list(knotinfo()["8_19"]["pd"]), table)


def test_knotinfo_pds_classify_to_themselves(table):
    ref = knotinfo()
    for name in table.names():
        k = classify_pd(PDCode.from_list(ref[name]["pd"]), table)
        assert k.base == name
        assert k.chirality in (Chirality.SameAsReference, Chirality.Amphichiral)


@pytest.mark.parametrize(
    "text, name",
    [
        ("L_oR_iC_oT", "0_1"),
        ("L_iC_oL_iC_oL_iR_oL_iC_oT", "7_1"),
        ("L_iC_oR_iC_oL_iR_oL_iC_oT", "7_5"),
    ],
)
def test_named_examples(table, text, name):
    assert classify_sequence(parse_sequence(text), table).base == name


def test_trefoil_handedness(table):
    right = classify_sequence(parse_sequence("LiRoLiCoT"), table)
    left = classify_sequence(parse_sequence("LoCiLoCiRoLiCoT"), table)
    assert right.chirality is Chirality.SameAsReference
    assert left.chirality is Chirality.MirrorOfReference
    assert recognize_family(parse_sequence("LiRoLiCoT")).label() == "trefoil/right"
    assert recognize_family(parse_sequence("LoCiLoCiRoLiCoT")).label() == "trefoil/left"


def test_figure_eight_is_amphichiral(table, appendix):
    rows = [r for r in appendix if r.knot_type == "4_1"]
    assert rows
    for r in rows:
        assert classify_sequence(parse_sequence(r.sequence), table).chirality is Chirality.Amphichiral


def test_family_examples():
    assert recognize_family(parse_sequence("L_iR_oC_iR_oL_iC_oT")).kind is FamilyKind.Unknot
    twist = recognize_family(parse_sequence("L_iR_oL_iR_oL_iR_oL_iC_oT"))
    assert (twist.kind, twist.twist_form, twist.twists) == (FamilyKind.Twist, 1, 5)
    torus = recognize_family(parse_sequence("L_oC_iL_oC_iR_oC_iL_oR_iC_oT"))
    assert (torus.kind, torus.torus_p) == (FamilyKind.Torus, 5)
    assert torus.label() == "torus/2,5"


def test_full_table_knot_types(table, appendix):
    for row in appendix:
        assert classify_sequence(parse_sequence(row.sequence), table).base == row.knot_type, row.fm_number


def test_twist_column_except_row_nine(table, appendix):
    for row in appendix:
        if row.fm_number == 9:
            continue
        form = recognize_family(parse_sequence(row.sequence)).twist_form
        assert (str(form) if form else "") == row.twist_type, row.fm_number


def test_row_nine_reads_as_form_three():
    # LiCoRiLoRiCoT reduces to LiCoRiCot1, the LC(RC)* shape; 5_2 has det 7
    fam = recognize_family(parse_sequence("LiCoRiLoRiCoT"))
    assert (fam.twist_form, fam.twists) == (3, 3)


def test_families_agree_with_classifier(table, appendix):
    for row in appendix:
        c = classify_full(parse_sequence(row.sequence), table)
        f = c.family
        assert (f.kind is FamilyKind.Unknot) == (row.knot_type == "0_1")
        assert (f.kind is FamilyKind.Trefoil) == (row.knot_type == "3_1")
        assert f.is_twist == (row.knot_type in TWIST_TYPES)
        assert f.is_torus == (row.knot_type in TORUS_TYPES)
        if f.is_torus:
            assert f.torus_p == KnotName.parse(row.knot_type).crossing_number
            assert c.determinant == f.torus_p
        if f.is_twist:
            assert c.determinant == 2 * f.twists + 1
            assert f.twist_form != 2 or f.twists % 2 == 0
            assert f.twist_form != 3 or f.twists % 2 == 1


def test_determinant_constant_per_type(table, appendix):
    dets = defaultdict(set)
    for row in appendix:
        dets[row.knot_type].add(classify_full(parse_sequence(row.sequence), table).determinant)
    assert all(len(v) == 1 for v in dets.values())


def test_two_bridge():
    assert is_two_bridge_listed(KnotName.parse("7_4"))
    assert not is_two_bridge_listed(KnotName.parse("8_5"))
    assert not is_two_bridge_listed(KnotName.parse("8_21"))
    assert is_two_bridge_listed(KnotName.parse("0_1"))
    with pytest.raises(ValueError):
        is_two_bridge_listed(KnotName.parse("9_1"))


def test_two_bridge_matches_knotinfo():
    for name, row in knotinfo().items():
        assert is_two_bridge_listed(KnotName.parse(name)) == (row["bridge_index"] != "3")


def test_every_tie_knot_two_bridge(appendix):
    assert all(is_two_bridge_listed(KnotName.parse(r.knot_type)) for r in appendix)


def test_knot_name_parsing():
    k = KnotName.parse("8_12")
    assert (k.crossing_number, k.table_index, str(k)) == (8, 12, "8_12")
    with pytest.raises(ValueError):
        KnotName.parse("trefoil")
    with pytest.raises(ValueError):
        KnotName(3, 0)


def test_classification_dict(table):
    d = classify_full(parse_sequence("LiRoLiCoT"), table).to_dict()
    assert d == {
        "sequence": "LiRoLiCoT",
        "reduced": "LiCot1",
        "knot": "3_1",
        "chirality": "same",
        "family": "trefoil/right",
        "determinant": 3,
        "jones": "1*q^4+1*q^12+-1*q^16",
    }
