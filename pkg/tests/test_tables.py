from __future__ import annotations

from tieknots.tables import compute_appendix, published_summary, summarize


def test_summary_tables_match(table):
    assert summarize(compute_appendix(table)) == published_summary()


def test_appendix_rows_numbered(table, appendix):
    rows = compute_appendix(table)
    assert [r.fm_number for r in rows] == list(range(1, 86))
    assert [r.sequence for r in rows] == [r.sequence for r in appendix]


def test_appendix_differs_only_in_row_nine_twist(table, appendix):
    computed = {r.fm_number: r.as_tuple() for r in compute_appendix(table)}
    diffs = [r.fm_number for r in appendix if computed[r.fm_number] != r.as_tuple()]
    assert diffs == [9]
