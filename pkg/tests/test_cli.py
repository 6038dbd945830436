import json

from hirzebruch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_todd(capsys):
    code, out, _ = run(capsys, "expand", "--series", "todd", "--order", "4")
    assert code == 0
    assert out.strip() == "1, 1/2, 1/12, 0, -1/720"


def test_expand_json_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "expand", "--series", "dab:a=1,b=1/2", "--order", "8", "--json")
    assert code == 0
    path = tmp_path / "series.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "expand", "--series", f"file:{path}", "--json")
    assert code == 0
    assert json.loads(out) == json.loads(out2)


def test_cpn_closed_form(capsys):
    code, out, _ = run(capsys, "cpn", "--series", "txy:x=2,y=3", "--n", "2", "--closed-form")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "7"
    assert lines[1] == "closed form: 7"


def test_catalog_lists_families(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "todd" in out and "dab:a=<q(i)>,b=<q(i)>" in out


def test_chern_kn_dump(capsys):
    code, out, _ = run(capsys, "chern", "--series", "todd", "--kn", "2")
    assert code == 0
    assert "[1, 1]: 1/12" in out and "[2]: 1/12" in out


def test_chern_data_evaluation(capsys, tmp_path):
    data = {"dimension": 2, "numbers": [
        {"partition": [1, 1], "value": "9"},
        {"partition": [2], "value": "3"},
    ]}
    path = tmp_path / "cp2.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "chern", "--series", "todd", "--data", str(path))
    assert code == 0
    assert out.strip() == "1"


def test_localize_weights_shorthand(capsys):
    code, out, _ = run(capsys, "localize", "--series", "todd", "--weights", "1,0",
                       "--order", "6")
    assert code == 0
    assert out.strip() == "1"


def test_localize_input_file(capsys, tmp_path):
    path = tmp_path / "fps.json"
    path.write_text(json.dumps({"points": [{"weights": [1], "sign": -1}]}))
    code, out, _ = run(capsys, "localize", "--series", "euler:a=2", "--input", str(path),
                       "--order", "3", "--json")
    assert code == 0
    series = json.loads(out)
    assert series["valuation"] == -1
    assert series["coeffs"][0] == {"re": "-1", "im": "0"}
    assert series["coeffs"][1] == {"re": "-2", "im": "0"}


def test_rigidity_pass_and_fail(capsys, tmp_path):
    code, out, _ = run(capsys, "rigidity", "--series", "dab:a=1,b=1", "--max-n", "2",
                       "--order", "8", "--trials", "5", "--seed", "7")
    assert code == 0 and out.startswith("PASS")

    bad = {"valuation": 0, "order": 14,
           "coeffs": [{"re": "1", "im": "0"}] * 4 + [{"re": "0", "im": "0"}] * 11}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "rigidity", "--series", f"file:{path}", "--max-n", "2",
                       "--order", "12", "--trials", "20", "--seed", "7")
    assert code == 2
    assert out.startswith("FAIL") and "degree 2" in out


def test_classify_text_and_expectation(capsys):
    code, out, _ = run(capsys, "classify", "--series", "todd")
    assert code == 0
    assert "GT series, case D" in out and "dab:a=1/2,b=1/2" in out

    code, out, _ = run(capsys, "classify", "--series", "gab:a=1,b=0", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["is_gt"] and report["d"] == "-1"

    code, _, _ = run(capsys, "classify", "--series", "euler:a=2", "--expect-gt")
    assert code == 0


def test_classify_not_gt_exit_code(capsys, tmp_path):
    bad = {"valuation": 0, "order": 6,
           "coeffs": [{"re": "1", "im": "0"}, {"re": "0", "im": "0"},
                      {"re": "1", "im": "0"}] + [{"re": "0", "im": "0"}] * 4}
    path = tmp_path / "notgt.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "classify", "--series", f"file:{path}")
    assert code == 0 and "not a GT series" in out
    code, _, _ = run(capsys, "classify", "--series", f"file:{path}", "--expect-gt")
    assert code == 2


def test_classify_oriented_rejects_todd(capsys):
    code, out, _ = run(capsys, "classify", "--series", "todd", "--oriented")
    assert code == 0
    assert "not even" in out and "degree 1" in out
    code, _, _ = run(capsys, "classify", "--series", "todd", "--oriented", "--expect-gt")
    assert code == 2
    code, out, _ = run(capsys, "classify", "--series", "dab:a=1,b=0", "--oriented", "--json")
    assert code == 0
    assert json.loads(out)["coth_a"] == "1"


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "expand")[0] == 1                       # missing --series
    assert run(capsys, "expand", "--series", "nope")[0] == 1   # unknown family
    assert run(capsys, "expand", "--series", "todd", "--bogus")[0] == 1
    assert run(capsys, "localize", "--series", "todd")[0] == 1
    assert run(capsys, "chern", "--series", "todd")[0] == 1
    assert run(capsys, "localize", "--series", "todd", "--weights", "0,0")[0] == 1
    assert run(capsys, "expand", "--series", "file:/does/not/exist.json")[0] == 1


def test_determinism(capsys):
    args = ("rigidity", "--series", "gab:a=1/2,b=1", "--max-n", "2", "--order", "8",
            "--trials", "10", "--seed", "11", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_default_order_env_override(capsys, monkeypatch):
    monkeypatch.setenv("GENUS_DEFAULT_ORDER", "6")
    code, out, _ = run(capsys, "expand", "--series", "todd")
    assert code == 0
    assert len(out.strip().split(", ")) == 7
    monkeypatch.setenv("GENUS_DEFAULT_ORDER", "junk")
    assert run(capsys, "expand", "--series", "todd")[0] == 1
