import pytest

import sostar


def test_counts_and_parity():
    assert len(sostar.enumerate_clans(4)) == 76
    assert set(sostar.enumerate_clans(2, "even")) == {"1+;2+", "1-;2-", "(1,2)-"}
    assert sostar.parity("(1,2)+") == "odd"
    assert sostar.format_clan("(1,3)+;2-") == "2-;(1,3)+"


def test_hmap():
    p = sostar.hmap("1+;2-")
    assert p["shape"] == [2, 2]
    assert p["signs"] == ["+-", "+-"]


def test_operators():
    assert sostar.tau("1+;2-") == ["b"]
    assert sostar.cross("a2", "1+;(2,3)+") == "2+;(1,3)+"
    assert sorted(sostar.cayley("a2", "(1,2)+")) == ["1+;2-", "1-;2+"]
    assert sostar.wallcross("T:a2,a3", "1+;2+;3-") == ["1+;(2,3)+"]
    assert len(sostar.cells(4)) == 9


def test_errors():
    with pytest.raises(ValueError):
        sostar.cayley("a2", "1+;2+")
    with pytest.raises(ValueError):
        sostar.format_clan("1+;1-")


def test_verify():
    assert sostar.verify("all", 3)
