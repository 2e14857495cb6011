from __future__ import annotations

import pytest

from oracles import knotinfo
from tieknots.pdcode import GaussCode, MalformedPDError, PDCode

TREFOIL = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]


def test_json_round_trip():
    pd = PDCode.from_list(TREFOIL)
    assert pd.to_json() == '{"pd":[[1,5,2,4],[3,1,4,6],[5,3,6,2]]}'
    assert PDCode.from_json(pd.to_json()) == pd
    assert PDCode.from_json("[]") == PDCode(())


@pytest.mark.parametrize(
    "bad",
    [
        [[1, 2, 3]],
        [[1, 2, 3, 4]],
        [[1, 1, 2, 2], [3, 3, 5, 5]],
        [[1, 2, 3, 4], [1, 2, 3, 5]],
    ],
)
def test_malformed(bad):
    with pytest.raises(MalformedPDError):
        PDCode.from_list(bad)


def test_mirror_negates_writhe():
    for row in knotinfo().values():
        pd = PDCode.from_list(row["pd"])
        assert pd.mirror().writhe() == -pd.writhe()
        assert pd.mirror().mirror() == pd


def test_euler_check_on_reference_knots():
    for row in knotinfo().values():
        pd = PDCode.from_list(row["pd"])
        assert pd.euler_ok()
        if len(pd):
            # n crossings, 2n edges, so n + 2 faces
            assert len(pd.faces()) == len(pd) + 2


def test_gauss_round_trip_on_reference_knots():
    for row in knotinfo().values():
        pd = PDCode.from_list(row["pd"])
        gauss = pd.gauss_code()
        assert len(gauss.tokens) == 2 * len(pd)
        assert GaussCode.parse(str(gauss)) == gauss
        rebuilt = gauss.to_pd()
        assert rebuilt.signs() == pd.signs()
        assert rebuilt.gauss_code() == gauss


def test_gauss_each_crossing_over_once_under_once():
    gauss = PDCode.from_list(TREFOIL).gauss_code()
    for cid in (1, 2, 3):
        kinds = sorted(ou for c, ou, _ in gauss.tokens if c == cid)
        assert kinds == ["O", "U"]


def test_empty():
    assert PDCode(()).gauss_code() == GaussCode(())
    assert str(GaussCode(())) == ""
