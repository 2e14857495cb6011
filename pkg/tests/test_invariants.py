from __future__ import annotations

import pytest

from oracles import brute_bracket, brute_jones, jones_from_t_text, knotinfo
from tieknots.diagram import build_diagram
from tieknots.grammar import parse_sequence
from tieknots.invariants import (
    bracket_span,
    determinant,
    goeritz_matrix,
    jones_polynomial,
    kauffman_bracket,
)
from tieknots.laurent import LaurentPolynomial
from tieknots.pdcode import PDCode
from tieknots.rewrite import DiagramWord, reduce_fully

A = LaurentPolynomial.monomial(1)
KNOTS = knotinfo()


def test_empty_bracket_and_jones():
    assert kauffman_bracket(PDCode(())) == 1
    assert jones_polynomial(PDCode(())) == LaurentPolynomial.constant(1, var="q")
    assert determinant(PDCode(())) == 1


def test_kinks():
    assert kauffman_bracket(PDCode.from_list([[1, 1, 2, 2]])) == -(A**3)
    assert kauffman_bracket(PDCode.from_list([[2, 1, 1, 2]])) == -(A**-3)
    for kink in ([[1, 1, 2, 2]], [[2, 1, 1, 2]]):
        assert jones_polynomial(PDCode.from_list(kink)) == 1


@pytest.mark.parametrize("name", sorted(KNOTS))
def test_bracket_matches_state_sum(name):
    pd = PDCode.from_list(KNOTS[name]["pd"])
    assert kauffman_bracket(pd) == brute_bracket(KNOTS[name]["pd"])


@pytest.mark.parametrize("name", sorted(KNOTS))
def test_jones_and_determinant_match_knotinfo(name):
    row = KNOTS[name]
    pd = PDCode.from_list(row["pd"])
    assert jones_polynomial(pd) == jones_from_t_text(row["jones"])
    assert jones_polynomial(pd) == brute_jones(row["pd"])
    assert determinant(pd) == row["determinant"]


@pytest.mark.parametrize("name", sorted(KNOTS))
def test_mirror_law(name):
    pd = PDCode.from_list(KNOTS[name]["pd"])
    assert jones_polynomial(pd.mirror()) == jones_polynomial(pd).inverted()
    assert determinant(pd.mirror()) == determinant(pd)


def test_goeritz_symmetric():
    for row in KNOTS.values():
        if not row["pd"]:
            continue
        g = goeritz_matrix(PDCode.from_list(row["pd"]))
        assert all(g[r][s] == g[s][r] for r in range(len(g)) for s in range(len(g)))


def test_trefoil_word_span():
    d = build_diagram(DiagramWord.parse("LiCot1"))
    bracket = kauffman_bracket(d.pd)
    assert bracket == brute_bracket(d.pd.crossings)
    assert bracket_span(bracket) == 12
    assert determinant(d.pd) == 3


def test_span_of_constant_and_zero():
    assert bracket_span(LaurentPolynomial.constant(1)) == 0
    with pytest.raises(ValueError):
        bracket_span(LaurentPolynomial())


def test_full_and_reduced_four_in_hand():
    seq = parse_sequence("LiRoLiCoT")
    word, _ = reduce_fully(seq)
    full = build_diagram(seq).pd
    assert jones_polynomial(full) == jones_polynomial(build_diagram(word).pd)
    assert kauffman_bracket(full) == brute_bracket(full.crossings)


def test_fm2_and_fm20_are_mirrors():
    v2 = jones_polynomial(build_diagram(parse_sequence("LiRoLiCoT")).pd)
    v20 = jones_polynomial(build_diagram(parse_sequence("LoCiLoCiRoLiCoT")).pd)
    assert v2 != v20
    assert v2 == v20.inverted()
    assert v2 == jones_from_t_text(KNOTS["3_1"]["jones"])


def test_figure_eight_determinant():
    assert determinant(PDCode.from_list(KNOTS["4_1"]["pd"])) == 5
