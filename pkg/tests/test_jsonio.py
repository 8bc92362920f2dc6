from fractions import Fraction

import pytest

from flipshift import jsonio
from flipshift.constructions import higher_block
from flipshift.errors import SchemaError
from flipshift.fixtures import (example1_pair, example2_matrix,
                                golden_mean_pair)
from flipshift.matrices import IntMatrix
from flipshift.series import TruncatedSeries


def test_matrix_round_trip_square():
    m = example2_matrix("B")
    doc = jsonio.matrix_to_doc(m)
    assert "labels" in doc
    assert jsonio.matrix_from_doc(doc) == m


def test_matrix_round_trip_rect():
    m = IntMatrix.rect("ab", "xyz", [[1, 2, 3], [4, 5, 6]])
    doc = jsonio.matrix_to_doc(m)
    assert doc["row_labels"] == ["a", "b"]
    assert jsonio.matrix_from_doc(doc) == m


def test_matrix_schema_error_path():
    with pytest.raises(SchemaError) as e:
        jsonio.matrix_from_doc({"labels": ["a"], "rows": [[1, "x"]]})
    assert "rows[0][1]" in str(e.value)


def test_pair_round_trip():
    p = example1_pair()
    doc = jsonio.pair_to_doc(p)
    back = jsonio.pair_from_doc(doc)
    assert back == p
    assert back.name == p.name


def test_pair_duplicate_labels_rejected():
    doc = {"alphabet": ["a", "a"], "A": [[1, 0], [0, 1]], "J": [[1, 0], [0, 1]]}
    with pytest.raises(SchemaError):
        jsonio.pair_from_doc(doc)


def test_series_round_trip():
    s = TruncatedSeries.from_coeffs(4, [1, Fraction(1, 2), 0, Fraction(-7, 3)])
    doc = jsonio.series_to_doc(s)
    assert doc["coeffs"] == ["1", "1/2", "0", "-7/3", "0"]
    assert jsonio.series_from_doc(doc) == s


def test_series_bad_fraction():
    with pytest.raises(SchemaError) as e:
        jsonio.series_from_doc({"order": 1, "coeffs": ["1", "x/y"]})
    assert "coeffs[1]" in str(e.value)


def test_chain_round_trip_reverifies():
    gm = golden_mean_pair()
    _, chain = higher_block(gm, 2)
    doc = jsonio.chain_to_doc(chain)
    back = jsonio.chain_from_doc(doc)
    assert back.lag == chain.lag
    assert back.pairs == chain.pairs
    assert all(a.R == b.R and a.S == b.S for a, b in zip(back.links, chain.links))


def test_chain_link_count_mismatch():
    gm = golden_mean_pair()
    doc = {"pairs": [jsonio.pair_to_doc(gm)], "links": [{"kind": "he", "R": [[1]]}]}
    with pytest.raises(SchemaError):
        jsonio.chain_from_doc(doc)


def test_blockflip_doc_round_trip():
    gm = golden_mean_pair()
    doc = {"A": jsonio.matrix_to_doc(gm.A), "window": 0,
           "phi": [{"block": "1", "image": "1"}, {"block": "2", "image": "2"}]}
    spec = jsonio.blockflip_from_doc(doc)
    assert spec.window == 0
    assert spec.rule[("1",)] == "1"
    again = jsonio.blockflip_from_doc(jsonio.blockflip_to_doc(spec))
    assert again.rule == spec.rule and again.A == spec.A


def test_conjugacy_doc_round_trip():
    gm = golden_mean_pair()
    target = gm.relabel({"1": "b", "2": "a"}).reorder(("a", "b"))
    doc = {"from": jsonio.pair_to_doc(gm), "to": jsonio.pair_to_doc(target),
           "psi": {"1": "b", "2": "a"}, "inverse_window": 0}
    spec = jsonio.conjugacy_from_doc(doc)
    assert spec.inverse_window == 0
    again = jsonio.conjugacy_from_doc(jsonio.conjugacy_to_doc(spec))
    assert again.psi == spec.psi and again.source == spec.source
    with pytest.raises(SchemaError):
        jsonio.conjugacy_from_doc({**doc, "inverse_window": "x"})
