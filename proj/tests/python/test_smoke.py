"""Smoke tests for the Python bindings."""

import pytest

import autocomm


def test_build_and_group_surface():
    g = autocomm.build("cyclic:4")
    assert g.order == 4
    assert g.name == "Z4"
    assert g.mul(1, 3) == 0
    assert g.inv(1) == 3
    assert g.element_order(2) == 2
    assert g.is_abelian()
    assert len(g) == 4
    assert g.table()[1][1] == 2
    assert g.labels == ["0", "1", "2", "3"]


def test_known_probabilities():
    assert autocomm.pr(autocomm.build("cyclic:3")) == "2/3"
    assert autocomm.pr(autocomm.build("symmetric:3")) == "1/2"
    assert autocomm.pr(autocomm.build("dicyclic:2")) == "3/8"


def test_distribution():
    dist = autocomm.distribution(autocomm.build("cyclic:4"))
    assert dist == {"0": "3/4", "1": "0/1", "2": "1/4", "3": "0/1"}


def test_automorphisms():
    auts = autocomm.automorphisms(autocomm.build("cyclic:8"))
    assert len(auts) == 4
    assert auts[0] == list(range(8))
    assert autocomm.aut_order(autocomm.build("elementary_abelian:2,3")) == 168


def test_analyze_report():
    report = autocomm.analyze("cyclic:4")
    assert report["pr"] == "3/4"
    assert report["L"] == [0, 2]
    assert report["orbit_count"] == 3
    assert all(e["holds"] for e in report["bounds"] if e["applicable"])
    c1 = next(c for c in report["characterizations"] if c["id"] == "C1")
    assert c1["hypothesis_met"] and c1["conclusion_holds"]


def test_isoclinic():
    hit = autocomm.isoclinic("cyclic:4", "cyclic:4")
    assert hit["status"] == "found"
    assert hit["invariance"]["distributions_match"]

    miss = autocomm.isoclinic("cyclic:3", "cyclic:4")
    assert miss["status"] == "none"

    starved = autocomm.isoclinic("cyclic:4", "cyclic:4", budget=0)
    assert starved["status"] == "budget_exceeded"


def test_survey():
    csv = autocomm.survey(max_order=8)
    lines = csv.strip().splitlines()
    assert lines[0].startswith("name,order,aut_order")
    assert any(line.startswith("Q8,8,24") for line in lines)
    assert csv == autocomm.survey(max_order=8, jobs=4)

    rows = autocomm.survey_rows(max_order=6)
    z4 = next(r for r in rows if r["name"] == "Z4")
    assert z4["pr"] == "3/4" and z4["b6_equality"] is True


def test_errors_surface_as_exceptions():
    with pytest.raises(autocomm.AutocommError):
        autocomm.build("frobnicate:3")
    with pytest.raises(autocomm.AutocommError):
        autocomm.build("file:/nonexistent/path.json")
