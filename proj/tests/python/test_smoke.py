import pytest

import berkcubic as bk

GOOD = {"coefficients": {"a3": "1", "a2": "t", "b2": "1", "b1": "1+2*t", "b0": "-1-t"}}
DEEP3 = {"pq": {"p": "t", "q": "t^2"}}


def test_parse_series():
    assert bk.parse_series("1 - 2*t + t^(3/2)") == "1 - 2*t + t^(3/2)"
    with pytest.raises(bk.BerkError):
        bk.parse_series("t^")


def test_validate():
    rep = bk.validate(GOOD)
    assert rep["valid"]
    bad = {"coefficients": {"a3": "1", "a2": "1", "b2": "1", "b1": "1", "b0": "1"}}
    assert not bk.validate(bad)["valid"]


def test_classify():
    assert bk.classify(GOOD) == {"case": "2-1-2"}
    deep = bk.classify(DEEP3)
    assert deep["case"] == "2-2-2-2-1-1"
    assert deep["deep_subcase"] == 3


def test_multiplicity():
    assert bk.multiplicity(GOOD, "0", "0") == 3
    assert bk.multiplicity(DEEP3, "1", "1") == 2


def test_locus_and_trace():
    rep = bk.locus(GOOD, mode="both")
    assert rep["locus"]["shape"] == "connected"
    assert rep["cross_check"]["agreement"]

    rep3 = bk.locus(DEEP3, mode="oracle")
    assert rep3["locus"]["shape"] == "two_components"
    pairs = {frozenset(s["endpoints"]) for s in rep3["locus"]["segments"]}
    assert pairs == {frozenset({"0", "c1"}), frozenset({"1", "c2"})}

    samples = bk.trace(DEEP3, grid=2)
    inner = [s for s in samples if s["interior_central"] and "multiplicity" in s]
    assert inner and all(s["multiplicity"] == 1 for s in inner)
    outer = [s for s in samples if not s["interior_central"] and "multiplicity" in s]
    assert outer and all(s["multiplicity"] >= 2 for s in outer)


def test_cross_check_flags_deep_disagreements():
    rep = bk.cross_check(DEEP3)
    assert rep["agreement"] is False
    assert rep["oracle"]["shape"] == "two_components"
