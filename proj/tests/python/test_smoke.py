import json
import pathlib
from fractions import Fraction

import pytest

import starspec

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def load(*parts):
    return json.loads((DATA.joinpath(*parts)).read_text())


def values(spectrum):
    out = []
    for r in spectrum:
        out += [Fraction(r["value"])] * r["mult"]
    return out


def test_forward_pendant_example():
    res = starspec.forward(load("three_edge_pendant", "graph.json"))
    assert values(res["neumann_squared"]) == [Fraction(1, 2), Fraction(3, 2), Fraction(2)]
    assert values(res["dirichlet_squared"]) == [1, 2, 2]
    assert Fraction(res["main_length"]) == 2


def test_inverse_pendant_reproduces_graph():
    res = starspec.inverse_pendant(load("three_edge_pendant", "spectra.json"),
                                   plan=load("three_edge_pendant", "plan.json"))
    assert res["graph"] == load("three_edge_pendant", "graph.json")


def test_lengths_accept_fractions():
    spectra = load("three_edge_pendant", "spectra.json")
    del spectra["main_length"], spectra["lengths"]
    res = starspec.inverse_pendant(spectra, main_length=2, lengths=[Fraction(2), 1],
                                   plan={"residue_split": {"2": ["2/3", "1/3"]}})
    assert res["main_edge"]["a_n1"] == "1/3"


def test_inverse_center_and_constraints():
    res = starspec.inverse_center(load("two_edge_center", "spectra.json"),
                                  plan=load("two_edge_center", "plan.json"), enumerate=True)
    assert res["graph"]["central_mass"] == "0"
    assert res["constraints"]["edges"] == 2


def test_validation_failure():
    bad = load("three_edge_pendant", "bad_spectra.json")
    assert starspec.validate(bad)["valid"] is False
    with pytest.raises(starspec.ValidationFailed) as info:
        starspec.inverse_pendant(bad)
    assert info.value.report["violations"][0]["condition"] == "1"


def test_errors_carry_codes():
    with pytest.raises(starspec.StarspecError) as info:
        starspec.forward("{")
    assert info.value.code == "E_SCHEMA"
    with pytest.raises(starspec.StarspecError) as info:
        starspec.cf_expand([1], [0])
    assert info.value.code.startswith("E_")


def test_roundtrip_and_matrix():
    assert starspec.verify_roundtrip(graph=load("three_edge_pendant", "graph.json"))["verdict"] == "pass"
    res = starspec.matrix(load("two_edge_center", "graph_massive.json"))
    assert res["interlacing"]["passed"]


def test_continued_fraction_roundtrip():
    # (z^2 - 3z + 2) / (z^2 - 2z + 3/4)
    a, b = starspec.cf_expand([2, -3, 1], [Fraction(3, 4), -2, 1])
    assert all(x > 0 for x in a) and all(x > 0 for x in b)
    num, den = starspec.cf_to_ratfun(a, b)
    assert Fraction(num[0]) / Fraction(den[0]) == Fraction(8, 3)
    assert [x / num[-1] for x in num] == [2, -3, 1]
    assert [x / den[-1] for x in den] == [Fraction(3, 4), -2, 1]
