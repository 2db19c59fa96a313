import json
import os

import pytest

from hopfdeform.cli import main

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "hopfdeform", "data")


def algebra_path(name):
    return os.path.join(DATA, f"{name}.json")


def test_associator_end_to_end(tmp_path, capsys):
    out = tmp_path / "assoc.json"
    code = main([
        "associator", "--algebra", algebra_path("sl2"), "--from-f", "dj",
        "--order", "3", "--even", "--out", str(out),
    ])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["verification"]["ok"]
    assert main(["verify", str(out)]) == 0


def test_bundled_algebra_name(tmp_path):
    out = tmp_path / "t.json"
    assert main(["twist", "--algebra", "sl2", "--order", "2", "--out", str(out)]) == 0


def test_order_zero_config_error(capsys):
    code = main(["associator", "--algebra", algebra_path("sl2"),
                 "--from-f", "dj", "--order", "0", "--even"])
    assert code == 2
    out = json.loads(capsys.readouterr().out)
    assert out["error"]["kind"] == "SchemaError"


def test_missing_cartan_error(capsys):
    code = main(["associator", "--algebra", algebra_path("heisenberg3"),
                 "--from-f", "dj", "--order", "2"])
    assert code == 3
    out = json.loads(capsys.readouterr().out)
    assert "Cartan" in out["error"]["message"]


def test_twist_noninvariant_square_error(tmp_path, capsys):
    alg = {"dim": 4, "basis": ["X", "Y", "U", "V"],
           "brackets": [{"i": 0, "j": 1, "terms": [["1", 1]]}]}
    apath = tmp_path / "alg.json"
    apath.write_text(json.dumps(alg))
    fpath = tmp_path / "f.json"
    fpath.write_text(json.dumps({
        "degree": 2,
        "terms": [{"indices": [0, 2], "c": "1"}, {"indices": [1, 3], "c": "1"}],
    }))
    code = main(["twist", "--algebra", str(apath), "--order", "2",
                 "--from-f", str(fpath)])
    assert code == 3


def test_qt_bad_t_error(tmp_path, capsys):
    tpath = tmp_path / "t.json"
    tpath.write_text(json.dumps({"terms": [
        {"legs": [[1, 0, 0], [0, 0, 1]], "c": "1"},
    ]}))
    code = main(["qt", "--algebra", algebra_path("sl2"), "--order", "2",
                 "--t", str(tpath)])
    assert code == 3


def test_verify_empty_file(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text("")
    code = main(["verify", str(p)])
    assert code == 2


def test_verify_mutated_certificate(tmp_path, capsys):
    out = tmp_path / "qt.json"
    assert main(["qt", "--algebra", algebra_path("sl2"), "--order", "2",
                 "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    doc["series"]["braiding"]["coeffs"][1]["terms"][0]["c"] = "17/5"
    mut = tmp_path / "mut.json"
    mut.write_text(json.dumps(doc))
    code = main(["verify", str(mut)])
    assert code == 1
    err = capsys.readouterr().err
    assert "verification failed" in err


def test_cohomology_report(tmp_path):
    out = tmp_path / "coh.json"
    code = main(["cohomology", "--algebra", algebra_path("abelian3"),
                 "--degree-cap", "3", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["cartier"][2]["h_dim"] == 1  # arity 3
    code = main(["cohomology", "--algebra", algebra_path("sl2"),
                 "--degree-cap", "2", "--from-f", "dj", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["ce_h3"]["h3_dim"] == 0
