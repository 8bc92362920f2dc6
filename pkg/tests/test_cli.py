import json
from pathlib import Path

import pytest

from flipshift import jsonio
from flipshift.cli import run_cli
from flipshift.constructions import higher_block
from flipshift.fixtures import (example1_pair, example1_symmetric_pair,
                                golden_mean_pair)
from flipshift.shifts import blocks, word_center

DATA = Path(__file__).resolve().parent.parent / "src" / "flipshift" / "data"


@pytest.fixture()
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return _write


def test_validate_fixture_pair(capsys):
    assert run_cli(["validate", str(DATA / "example1_AJ.json")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["valid"] is True
    assert out["command"] == "validate"


def test_validate_rejects_broken_pair(write, capsys):
    doc = jsonio.pair_to_doc(example1_pair())
    doc["J"][0][0] = 1  # J now fails J*J == I
    assert run_cli(["validate", write("bad.json", doc)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["valid"] is False and out["axiom"] == "J_involution"


def test_zeta_gen_series_matches_expected(capsys):
    code = run_cli(["zeta", "--pair", str(DATA / "example1_AI.json"),
                    "--which", "gen", "--order", "8"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["series"]["coeffs"] == ["0", "0", "4", "0", "8", "0", "16", "0", "32"]


def test_charpoly_example2(capsys):
    assert run_cli(["charpoly", str(DATA / "example2_C.json")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coefficients"] == [0, 1, -7, 19, -26, 19, -7, 1]


def test_count_csv(capsys):
    code = run_cli(["count", "--pair", str(DATA / "example1_AI.json"),
                    "--m-max", "2", "--n", "0", "--format", "csv"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "m,n,count"
    assert lines[2] == "2,0,8"


def test_malformed_json_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(["validate", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_schema_violation_is_usage_error(write, capsys):
    path = write("pair.json", {"alphabet": ["a"], "A": [[1]]})
    assert run_cli(["validate", path]) == 2
    assert "J" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run_cli(["validate", "does-not-exist.json"]) == 2


def test_he_check_cli(write, capsys):
    gm = golden_mean_pair()
    hb2, chain = higher_block(gm, 1)
    src = write("src.json", jsonio.pair_to_doc(gm))
    dst = write("dst.json", jsonio.pair_to_doc(hb2))
    r = write("r.json", {"rows": chain.links[0].R.to_rows()})
    assert run_cli(["he-check", "--from", src, "--to", dst, "--R", r]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["valid"] is True

    bad_rows = [row[:] for row in chain.links[0].R.to_rows()]
    bad_rows[0][0] ^= 1
    r_bad = write("rbad.json", {"rows": bad_rows})
    assert run_cli(["he-check", "--from", src, "--to", dst, "--R", r_bad]) == 1


def test_sfe_check_cli(write, capsys):
    src = write("src.json", jsonio.pair_to_doc(example1_pair()))
    dst = write("dst.json", jsonio.pair_to_doc(example1_symmetric_pair()))
    r = write("r.json", {"rows": example1_pair().A.to_rows()})
    assert run_cli(["sfe-check", "--from", src, "--to", dst,
                    "--R", r, "--lag", "2"]) == 0
    capsys.readouterr()
    assert run_cli(["sfe-check", "--from", src, "--to", dst,
                    "--R", r, "--lag", "1"]) == 1


def test_sse_verify_cli(write, capsys):
    gm = golden_mean_pair()
    _, chain = higher_block(gm, 2)
    path = write("chain.json", jsonio.chain_to_doc(chain))
    assert run_cli(["sse-verify", path]) == 0
    capsys.readouterr()

    doc = jsonio.chain_to_doc(chain)
    doc["links"][1]["R"][0][0] ^= 1
    bad = write("bad_chain.json", doc)
    assert run_cli(["sse-verify", bad]) == 1


def test_sfe_search_cli(write, capsys):
    src = write("src.json", jsonio.pair_to_doc(example1_pair()))
    dst = write("dst.json", jsonio.pair_to_doc(example1_symmetric_pair()))
    assert run_cli(["sfe-search", "--from", src, "--to", dst,
                    "--lag-max", "2", "--entry-max", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] >= 1


def test_higher_block_cli(capsys):
    assert run_cli(["higher-block", "--pair", str(DATA / "golden_mean.json"),
                    "--n", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["pair"]["alphabet"] == ["1 1", "1 2", "2 1"]
    assert out["verification"]["passed"] is True


def test_build_pair_cli(write, capsys):
    gm = golden_mean_pair()
    rule = [{"block": " ".join(w), "image": w[2]} for w in blocks(gm.A, 3)]
    spec = write("spec.json", {"A": jsonio.matrix_to_doc(gm.A), "window": 1,
                               "phi": rule})
    assert run_cli(["build-pair", spec]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["pair"]["alphabet"]) == 8


def test_decompose_cli(write, capsys):
    gm = golden_mean_pair()
    hb3, _ = higher_block(gm, 2)
    psi = {lab: word_center(tuple(lab.split(" "))) for lab in hb3.alphabet}
    conj = write("conj.json", {"from": jsonio.pair_to_doc(hb3),
                               "to": jsonio.pair_to_doc(gm),
                               "psi": psi, "inverse_window": 1})
    assert run_cli(["decompose", conj, "--verify-period", "6"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["lag"] == 4
    assert out["verification"]["passed"] is True


def test_paper_examples_cli(capsys):
    assert run_cli(["paper-examples"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["report"]["passed"] is True


def test_paper_examples_detects_corruption(monkeypatch, capsys):
    import flipshift.fixtures as fx
    rows = [list(r) for r in fx.EXAMPLE2_C]
    # flipping a diagonal entry keeps the flip-pair axioms but changes the polynomial
    rows[0][0] ^= 1
    monkeypatch.setattr(fx, "EXAMPLE2_C", tuple(tuple(r) for r in rows))
    assert run_cli(["paper-examples"]) == 1
    out = json.loads(capsys.readouterr().out)
    failing = [c["name"] for c in out["report"]["checks"] if not c["passed"]]
    assert any("characteristic polynomial" in name for name in failing)


def test_paper_examples_order_override(capsys):
    assert run_cli(["paper-examples", "--order", "4", "--format", "plain"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_reports_are_deterministic(capsys):
    run_cli(["paper-examples"])
    first = capsys.readouterr().out
    run_cli(["paper-examples"])
    second = capsys.readouterr().out
    assert first == second


def test_data_files_match_embedded_fixtures():
    from flipshift import fixtures
    pairs = {
        "example1_AJ.json": fixtures.example1_pair(),
        "example1_AI.json": fixtures.example1_symmetric_pair(),
        "example2_AJ.json": fixtures.example2_pair("A"),
        "example2_BJ.json": fixtures.example2_pair("B"),
        "example2_CJ.json": fixtures.example2_pair("C"),
        "golden_mean.json": fixtures.golden_mean_pair(),
    }
    for name, pair in pairs.items():
        doc = json.loads((DATA / name).read_text())
        assert jsonio.pair_from_doc(doc) == pair
    for name, matrix in [("example1_A.json", fixtures.example1_matrix_A()),
                         ("example2_A.json", fixtures.example2_matrix("A")),
                         ("example2_B.json", fixtures.example2_matrix("B")),
                         ("example2_C.json", fixtures.example2_matrix("C")),
                         ("example2_J.json", fixtures.example2_matrix("J"))]:
        doc = json.loads((DATA / name).read_text())
        assert jsonio.matrix_from_doc(doc) == matrix
